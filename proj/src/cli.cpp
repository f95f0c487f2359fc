// Copyright 2026 The finring Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "finring/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "finring/error.hpp"
#include "finring/incidence.hpp"
#include "finring/parse.hpp"
#include "finring/ring.hpp"
#include "finring/spectral.hpp"
#include "finring/verify.hpp"
#include "json.hpp"

namespace finring {
namespace {

using nlohmann::json;

constexpr const char* kAllUnits = "all-units";

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

Elem resolve_t(const RingTable& ring, const std::string& label) {
  if (label.empty()) return ring.one();
  const auto found = ring.find(strip_spaces(label));
  if (!found) throw ArgumentError("'" + label + "' is not an element label of " + ring.description());
  if (!ring.is_unit(*found)) throw ArgumentError("t = " + label + " is not a unit");
  return *found;
}

std::vector<RingSpec> resolve_rings(const RunConfig& config, bool required) {
  std::vector<RingSpec> specs;
  for (const auto& text : config.rings) specs.push_back(parse_ring_spec(text));
  if (required && specs.empty()) throw ArgumentError(to_string(config.command) + " needs --ring");
  return specs;
}

VerifyOptions verify_options(const RunConfig& config) {
  VerifyOptions options;
  options.spectral.tol = config.tol;
  options.spectral.method = config.method;
  options.spectral.workers = config.workers;
  options.spectral.seed = config.seed;
  options.seed = config.seed;
  options.trials = config.trials;
  return options;
}

std::optional<ResultCache> open_cache(const RunConfig& config) {
  std::string dir = config.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("FINRING_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return ResultCache(dir);
}

// Text rendering of a flat JSON object: "key: value" lines.
std::string text_lines(const json& j, const std::string& indent = "") {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += indent + key + ": ";
    if (value.is_number_float()) {
      out += format_g12(value.get<double>());
    } else if (value.is_string()) {
      out += value.get<std::string>();
    } else if (value.is_array() && !value.empty() && value.front().is_number_float()) {
      std::string joined;
      for (const auto& v : value) joined += (joined.empty() ? "" : " ") + format_g12(v.get<double>());
      out += joined;
    } else {
      out += value.dump();
    }
    out += '\n';
  }
  return out;
}

struct Emission {
  std::string text;
  int code = kExitOk;
};

void diagnostic(std::ostream& err, const std::string& kind, const std::string& message,
                json extra = json::object()) {
  extra["error"] = kind;
  extra["message"] = message;
  err << extra.dump() << '\n';
}

void dump_adjacency(const IncidenceOperator& op, const std::string& path) {
  std::ofstream csv(path);
  if (!csv) throw ArgumentError("cannot write " + path);
  write_adjacency_csv(op, csv);
  std::ofstream header(path + ".json");
  const RingTable& ring = *op.ring();
  header << json{{"ring", ring.spec() ? display_string(*ring.spec()) : ring.description()},
                 {"d", op.dimension()},
                 {"t", ring.label(op.t())},
                 {"incidences", count_incidences(op)}}
                .dump(2)
         << '\n';
}

Emission cmd_info(const RunConfig& config) {
  const auto specs = resolve_rings(config, true);
  json list = json::array();
  for (const auto& spec : specs) {
    const RingPtr ring = build_ring(spec);
    const Ideal J = jacobson_radical(ring);
    json j = {{"spec", display_string(spec)},
              {"canonical", canonical_string(spec)},
              {"size", ring->size()},
              {"units", ring->units().size()},
              {"radical_size", J.size()},
              {"quotient_shape", quotient_shape(spec)},
              {"commutative", ring->commutative()},
              {"field", is_field(spec)},
              {"opposite_iso", opposite_iso(*ring).has_value()},
              {"additive_radices", ring->additive_radices()},
              {"one", ring->label(ring->one())}};
    if (ring->size() <= 64) {
      json units = json::array(), radical = json::array();
      for (Elem u : ring->units()) units.push_back(ring->label(u));
      for (Elem r : J.members) radical.push_back(ring->label(r));
      j["unit_labels"] = units;
      j["radical_labels"] = radical;
    }
    list.push_back(j);
  }
  Emission e;
  switch (config.format) {
    case Format::json:
      e.text = (list.size() == 1 ? list.front() : json{{"rings", list}}).dump(2) + "\n";
      break;
    case Format::csv:
      e.text = "spec,canonical,size,units,radical_size,quotient_shape,commutative,field\n";
      for (const auto& j : list) {
        e.text += "\"" + j["spec"].get<std::string>() + "\",\"" + j["canonical"].get<std::string>() +
                  "\"," + j["size"].dump() + ',' + j["units"].dump() + ',' + j["radical_size"].dump() +
                  ',' + j["quotient_shape"].get<std::string>() + ',' + j["commutative"].dump() + ',' +
                  j["field"].dump() + '\n';
      }
      break;
    case Format::text:
      for (std::size_t i = 0; i < list.size(); ++i) e.text += (i ? "\n" : "") + text_lines(list[i]);
      break;
  }
  return e;
}

struct SalemBlock {
  std::string ring;
  bool all_units = false;
  std::vector<std::string> report_json;  // verbatim, possibly from the cache
  std::vector<SpectralReport> reports;
  double max_deviation = 0.0;
};

Emission cmd_salem(const RunConfig& config, std::ostream& err) {
  const auto specs = resolve_rings(config, true);
  const auto cache = open_cache(config);
  const VerifyOptions options = verify_options(config);
  std::vector<SalemBlock> blocks;
  bool converged = true;
  bool dumped = false;
  for (const auto& spec : specs) {
    const RingPtr ring = build_ring(spec);
    SalemBlock block;
    block.ring = display_string(spec);
    std::vector<Elem> ts;
    if (config.t_label == kAllUnits) {
      block.all_units = true;
      ts = ring->units();
    } else {
      ts.push_back(resolve_t(*ring, config.t_label));
    }
    for (Elem t : ts) {
      const std::string key = ResultCache::key(canonical_string(spec), config.d, ring->label(t),
                                               config.tol, config.method, config.seed);
      std::optional<std::string> text;
      const bool need_op = !config.dump_adjacency.empty() && !dumped;
      if (cache && !need_op) text = cache->get(key);
      if (!text) {
        const auto op = build_incidence(ring, config.d, t, config.workers);
        if (need_op) {
          dump_adjacency(op, config.dump_adjacency);
          dumped = true;
        }
        text = spectral_report_json(spectral_report(op, options.spectral));
        if (cache) cache->put(key, *text);
      }
      SpectralReport report = spectral_report_from_json(*text);
      converged = converged && report.converged;
      block.report_json.push_back(*text);
      block.reports.push_back(std::move(report));
    }
    if (block.all_units) {
      double lo = INFINITY, hi = 0.0;
      for (const auto& r : block.reports) {
        lo = std::min(lo, r.norm_W.value_or(0.0));
        hi = std::max(hi, r.norm_W.value_or(0.0));
      }
      block.max_deviation = hi > 0 ? (hi - lo) / hi : 0.0;
    }
    blocks.push_back(std::move(block));
  }

  Emission e;
  auto block_json = [](const SalemBlock& b) {
    if (!b.all_units) return json::parse(b.report_json.front());
    json reports = json::array();
    for (const auto& r : b.report_json) reports.push_back(json::parse(r));
    return json{{"ring", b.ring},
                {"t", kAllUnits},
                {"reports", reports},
                {"max_deviation", b.max_deviation},
                {"units_equal", b.max_deviation <= 1e-8}};
  };
  switch (config.format) {
    case Format::json:
      if (blocks.size() == 1 && !blocks.front().all_units) {
        e.text = blocks.front().report_json.front();
      } else if (blocks.size() == 1) {
        e.text = block_json(blocks.front()).dump(2) + "\n";
      } else {
        json list = json::array();
        for (const auto& b : blocks) list.push_back(block_json(b));
        e.text = json{{"reports", list}}.dump(2) + "\n";
      }
      break;
    case Format::csv: {
      std::vector<SpectralReport> all;
      for (const auto& b : blocks) all.insert(all.end(), b.reports.begin(), b.reports.end());
      e.text = spectral_csv(all);
      break;
    }
    case Format::text:
      for (const auto& b : blocks) {
        for (const auto& r : b.report_json) e.text += (e.text.empty() ? "" : "\n") + text_lines(json::parse(r));
        if (b.all_units) e.text += "\nmax_deviation: " + format_g12(b.max_deviation) + "\n";
      }
      break;
  }
  if (!converged) {
    diagnostic(err, "convergence", "power iteration did not converge within the iteration cap");
    e.code = kExitNotConverged;
  }
  return e;
}

Emission emit_checks(const RunConfig& config, const std::vector<TheoremCheck>& checks,
                     const std::string& suite, std::ostream& err) {
  Emission e;
  switch (config.format) {
    case Format::json:
      e.text = checks_json(checks, suite);
      break;
    case Format::csv:
      e.text = checks_csv(checks);
      break;
    case Format::text:
      for (const auto& c : checks) {
        e.text += std::string(c.passed ? "PASS " : "FAIL ") + c.id + " | " + c.instance + " | " +
                  format_g12(c.observed) + " " + to_string(c.direction) + " " +
                  format_g12(c.claimed_bound) + "\n";
      }
      break;
  }
  json failed = json::array();
  for (const auto& c : checks) {
    if (!c.passed) failed.push_back(c.id + " " + c.instance);
  }
  if (!failed.empty()) {
    diagnostic(err, "check", std::to_string(failed.size()) + " check(s) failed", {{"failed", failed}});
    e.code = kExitCheckFailed;
  }
  return e;
}

Emission cmd_verify(const RunConfig& config, std::ostream& err) {
  const VerifyOptions options = verify_options(config);
  const auto specs = resolve_rings(config, false);
  if (specs.empty()) return emit_checks(config, run_suite(config.suite, options), config.suite, err);
  std::vector<TheoremCheck> checks;
  std::string label;
  for (const auto& spec : specs) {
    auto more = run_ring_checks(spec, config.d, options);
    checks.insert(checks.end(), more.begin(), more.end());
    label += (label.empty() ? "" : ";") + display_string(spec);
  }
  return emit_checks(config, checks, label, err);
}

Emission cmd_scan(const RunConfig& config) {
  auto family = resolve_rings(config, false);
  if (family.empty() || !config.family.empty()) {
    auto named = scan_family(config.family.empty() ? "default" : config.family);
    family.insert(family.end(), named.begin(), named.end());
  }
  const auto rows = scan_salem(family, config.d, verify_options(config));
  Emission e;
  switch (config.format) {
    case Format::json:
      e.text = scan_json(rows, config.d);
      break;
    case Format::csv:
      e.text = scan_csv(rows);
      break;
    case Format::text: {
      char line[256];
      std::snprintf(line, sizeof line, "%-28s %6s %4s %-12s %-16s %-16s %s\n", "spec", "size", "|J|",
                    "R/J", "salem", "witness", "method");
      e.text = line;
      for (const auto& r : rows) {
        const std::string salem = r.salem ? format_g12(*r.salem) : "error";
        const std::string witness = r.witness_lower ? format_g12(*r.witness_lower) : "-";
        std::snprintf(line, sizeof line, "%-28s %6zu %4zu %-12s %-16s %-16s %s\n", r.spec.c_str(),
                      r.size, r.radical_size, r.quotient_shape.c_str(), salem.c_str(), witness.c_str(),
                      r.error.empty() ? r.method.c_str() : r.error.c_str());
        e.text += line;
      }
      break;
    }
  }
  return e;
}

Emission cmd_edot(const RunConfig& config, std::ostream& err) {
  const auto specs = resolve_rings(config, true);
  const VerifyOptions options = verify_options(config);
  std::vector<EdotEReport> reports;
  std::vector<TheoremCheck> checks;
  for (const auto& spec : specs) {
    const RingPtr ring = build_ring(spec);
    const Elem t = resolve_t(*ring, config.t_label);
    reports.push_back(edot_experiment(spec, config.d, t, config.trials, config.seed, options));
    checks.push_back(check_edot(reports.back()));
  }
  Emission e;
  switch (config.format) {
    case Format::json:
      if (reports.size() == 1) {
        e.text = edot_json(reports.front());
      } else {
        json list = json::array();
        for (const auto& r : reports) list.push_back(json::parse(edot_json(r)));
        e.text = json{{"reports", list}}.dump(2) + "\n";
      }
      break;
    case Format::csv:
      e.text = "ring,d,t,measured_salem,incidences,threshold,set_size,trials,failures,seed,vacuous\n";
      for (const auto& r : reports) {
        e.text += "\"" + r.ring + "\"," + std::to_string(r.d) + ",\"" + r.t_label + "\"," +
                  format_g12(r.measured_salem) + ',' + std::to_string(r.incidences) + ',' +
                  format_g12(r.threshold) + ',' + std::to_string(r.set_size) + ',' +
                  std::to_string(r.trials) + ',' + std::to_string(r.failures) + ',' +
                  std::to_string(r.seed) + ',' + (r.vacuous ? "true" : "false") + '\n';
      }
      break;
    case Format::text:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        e.text += (i ? "\n" : "") + text_lines(json::parse(edot_json(reports[i])));
      }
      break;
  }
  for (const auto& c : checks) {
    if (!c.passed) {
      diagnostic(err, "check", "t not in E.E for some trial", {{"failed", {c.id + " " + c.instance}}});
      e.code = kExitCheckFailed;
    }
  }
  return e;
}

Emission cmd_graph(const RunConfig& config, std::ostream& err) {
  const auto specs = resolve_rings(config, true);
  std::vector<GraphReport> reports;
  std::vector<TheoremCheck> checks;
  for (const auto& spec : specs) {
    if (!is_field(spec) || std::holds_alternative<MatSpec>(spec.ctor) ||
        std::holds_alternative<ProdSpec>(spec.ctor)) {
      throw ArgumentError("graph needs a finite field, got " + display_string(spec));
    }
    const RingPtr ring = build_ring(spec);
    const Elem t = resolve_t(*ring, config.t_label);
    if (!config.dump_adjacency.empty() && reports.empty()) {
      dump_adjacency(build_incidence(ring, config.d, t, config.workers), config.dump_adjacency);
    }
    reports.push_back(graph_analysis(std::uint32_t(ring->size()), config.d, t));
    checks.push_back(check_graph(reports.back()));
  }
  Emission e;
  switch (config.format) {
    case Format::json:
      if (reports.size() == 1) {
        e.text = graph_json(reports.front());
      } else {
        json list = json::array();
        for (const auto& r : reports) list.push_back(json::parse(graph_json(r)));
        e.text = json{{"reports", list}}.dump(2) + "\n";
      }
      break;
    case Format::csv:
      e.text = "ring,d,t,vertices,regular_degree,components,big_component_size,connected,laplacian_gap,"
               "laplacian_bound,adjacency_min,adjacency_max\n";
      for (const auto& r : reports) {
        e.text += "\"" + r.ring + "\"," + std::to_string(r.d) + ",\"" + r.t_label + "\"," +
                  std::to_string(r.vertices) + ',' +
                  (r.regular_degree ? std::to_string(*r.regular_degree) : "") + ',' +
                  std::to_string(r.components) + ',' + std::to_string(r.big_component_size) + ',' +
                  (r.connected ? "true" : "false") + ',' + format_g12(r.laplacian_gap) + ',' +
                  format_g12(r.laplacian_bound) + ',' + format_g12(r.adjacency_min) + ',' +
                  format_g12(r.adjacency_max) + '\n';
      }
      break;
    case Format::text:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        e.text += (i ? "\n" : "") + text_lines(json::parse(graph_json(reports[i])));
      }
      break;
  }
  for (const auto& c : checks) {
    if (!c.passed) {
      diagnostic(err, "check", "graph property failed", {{"failed", {c.id + " " + c.instance}}});
      e.code = kExitCheckFailed;
    }
  }
  return e;
}

Emission dispatch(const RunConfig& config, std::ostream& err) {
  if (config.d < 2 && config.command != Command::info && config.command != Command::verify) {
    throw ArgumentError("d must be at least 2");
  }
  switch (config.command) {
    case Command::info:
      return cmd_info(config);
    case Command::salem:
      return cmd_salem(config, err);
    case Command::verify:
      return cmd_verify(config, err);
    case Command::scan:
      return cmd_scan(config);
    case Command::edot:
      return cmd_edot(config, err);
    case Command::graph:
      return cmd_graph(config, err);
  }
  throw ArgumentError("unknown command");
}

}  // namespace

std::vector<std::string> family_names() {
  return {"fields", "local", "semisimple", "separation", "default"};
}

std::vector<RingSpec> scan_family(const std::string& name) {
  if (name == "fields") {
    std::vector<RingSpec> out;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) out.push_back(gf_q(q));
    return out;
  }
  if (name == "local") {
    return {zmod(4), zmod(8), zmod(9), trunc(gf_spec(2), 2), trunc(gf_spec(3), 2),
            trunc(gf_spec(2), 3), trunc(gf_spec(2, 2), 2)};
  }
  if (name == "semisimple") {
    return {zmod(6), zmod(10), prod({gf(2), gf(2)}), prod({gf(2), gf(3)}), prod({gf(3), gf(3)}),
            mat(2, gf_spec(2))};
  }
  if (name == "separation") return separation_family();
  if (name == "default") {
    std::vector<RingSpec> out;
    for (const char* part : {"fields", "local", "semisimple", "separation"}) {
      for (auto& spec : scan_family(part)) {
        if (std::find(out.begin(), out.end(), spec) == out.end()) out.push_back(std::move(spec));
      }
    }
    return out;
  }
  throw ArgumentError("unknown family '" + name + "'");
}

void write_diagnostic(std::ostream& err, const std::string& kind, const std::string& message) {
  diagnostic(err, kind, message);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Emission e = dispatch(config, err);
    if (config.output == "-") {
      out << e.text;
      out.flush();
    } else {
      std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
      if (!file) throw ArgumentError("cannot write " + config.output);
      file << e.text;
    }
    return e.code;
  } catch (const ParseError& e) {
    diagnostic(err, "parse", e.what(), {{"position", e.position()}});
    return kExitUsage;
  } catch (const ArgumentError& e) {
    diagnostic(err, "argument", e.what());
    return kExitUsage;
  } catch (const ConstructionError& e) {
    diagnostic(err, "construction", e.what());
    return kExitUsage;
  } catch (const ScaleError& e) {
    diagnostic(err, "scale", e.what());
    return kExitScale;
  } catch (const std::exception& e) {
    diagnostic(err, "internal", e.what());
    return kExitInternal;
  }
}

}  // namespace finring
