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


#include "finring/io.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <fstream>
#include "json.hpp"
#include <sstream>

#include "finring/error.hpp"

namespace finring {
namespace {

using nlohmann::json;

std::string trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::string format_17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

template <class T>
T parse_unsigned(std::string_view key, std::string_view value) {
  const std::string text(value);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ArgumentError(std::string(key) + ": expected a non-negative integer, got '" + text + "'");
  }
  try {
    return static_cast<T>(std::stoull(text));
  } catch (const std::exception&) {
    throw ArgumentError(std::string(key) + ": integer out of range");
  }
}

double parse_real(std::string_view key, std::string_view value) {
  const std::string text(value);
  char* end = nullptr;
  const double out = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0') {
    throw ArgumentError(std::string(key) + ": expected a number, got '" + text + "'");
  }
  return out;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// CSV field quoting for values that may hold commas or quotes.
std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_optional(const std::optional<double>& v) { return v ? format_g12(*v) : ""; }

json check_to_json(const TheoremCheck& c) {
  json subs = json::array();
  for (const auto& s : c.sub_checks) {
    subs.push_back({{"name", s.name}, {"observed", s.observed}, {"bound", s.bound}, {"passed", s.passed}});
  }
  return {{"id", c.id},
          {"instance", c.instance},
          {"direction", to_string(c.direction)},
          {"claimed_bound", c.claimed_bound},
          {"observed", c.observed},
          {"margin", c.margin},
          {"tolerance", c.tolerance},
          {"passed", c.passed},
          {"sub_checks", subs},
          {"notes", c.notes}};
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::info:
      return "info";
    case Command::salem:
      return "salem";
    case Command::verify:
      return "verify";
    case Command::scan:
      return "scan";
    case Command::edot:
      return "edot";
    case Command::graph:
      return "graph";
  }
  return "info";
}

std::string to_string(Format format) {
  switch (format) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::text:
      return "text";
  }
  return "json";
}

Command parse_command(std::string_view text) {
  for (Command c : {Command::info, Command::salem, Command::verify, Command::scan, Command::edot,
                    Command::graph}) {
    if (text == to_string(c)) return c;
  }
  throw ArgumentError("unknown command '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  for (Format f : {Format::json, Format::csv, Format::text}) {
    if (text == to_string(f)) return f;
  }
  throw ArgumentError("unknown format '" + std::string(text) + "' (json, csv or text)");
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out << "command=" << to_string(c.command) << '\n';
  for (const auto& r : c.rings) out << "ring=" << r << '\n';
  out << "d=" << c.d << '\n'
      << "t=" << c.t_label << '\n'
      << "tol=" << format_17(c.tol) << '\n'
      << "seed=" << c.seed << '\n'
      << "workers=" << c.workers << '\n'
      << "output=" << c.output << '\n'
      << "format=" << to_string(c.format) << '\n'
      << "suite=" << c.suite << '\n'
      << "trials=" << c.trials << '\n'
      << "method=" << to_string(c.method) << '\n'
      << "cache-dir=" << c.cache_dir << '\n'
      << "family=" << c.family << '\n'
      << "dump-adjacency=" << c.dump_adjacency << '\n';
  return out.str();
}

void apply_setting(RunConfig& c, std::string_view raw_key, std::string_view raw_value) {
  std::string key = trim(raw_key);
  for (auto& ch : key) {
    if (ch == '_') ch = '-';
  }
  const std::string value = trim(raw_value);
  if (key == "command") {
    c.command = parse_command(value);
  } else if (key == "ring") {
    c.rings.push_back(value);
  } else if (key == "d") {
    c.d = parse_unsigned<std::size_t>(key, value);
  } else if (key == "t") {
    c.t_label = value;
  } else if (key == "tol") {
    c.tol = parse_real(key, value);
  } else if (key == "seed") {
    c.seed = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "workers") {
    c.workers = parse_unsigned<std::size_t>(key, value);
  } else if (key == "output") {
    c.output = value.empty() ? "-" : value;
  } else if (key == "format") {
    c.format = parse_format(value);
  } else if (key == "suite") {
    c.suite = value;
  } else if (key == "trials") {
    c.trials = parse_unsigned<std::size_t>(key, value);
  } else if (key == "method") {
    c.method = parse_method(value);
  } else if (key == "cache-dir") {
    c.cache_dir = value;
  } else if (key == "family") {
    c.family = value;
  } else if (key == "dump-adjacency") {
    c.dump_adjacency = value;
  } else {
    throw ArgumentError("unknown config key '" + key + "'");
  }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ArgumentError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    try {
      apply_setting(base, std::string_view(body).substr(0, eq), std::string_view(body).substr(eq + 1));
    } catch (const ArgumentError& e) {
      throw ArgumentError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

std::string ResultCache::key(const std::string& canonical_spec, std::size_t d,
                             const std::string& t_label, double tol, SpectralMethod method,
                             std::uint64_t seed) {
  return canonical_spec + "|d=" + std::to_string(d) + "|t=" + t_label + "|tol=" + format_17(tol) +
         "|method=" + to_string(method) + "|seed=" + std::to_string(seed);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return directory_ / name;
}

// File layout: the key on the first line, then the report bytes verbatim.
std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string first;
  if (!std::getline(in, first) || first != key) return std::nullopt;
  std::ostringstream rest;
  rest << in.rdbuf();
  return rest.str();
}

void ResultCache::put(const std::string& key, const std::string& report_json) const {
  static std::atomic<unsigned> counter{0};
  const auto target = path_for(key);
  auto temp = target;
  temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + temp.string());
    out << key << '\n' << report_json;
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

std::string format_g12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string spectral_report_json(const SpectralReport& r) {
  json j = {{"ring", r.ring},
            {"d", r.d},
            {"t", r.t_label},
            {"norm_W", optional_number(r.norm_W)},
            {"norm_V", optional_number(r.norm_V)},
            {"salem", optional_number(r.salem)},
            {"method", r.method},
            {"iterations", r.iterations},
            {"residual", r.residual},
            {"tolerance", r.tolerance},
            {"converged", r.converged},
            {"trivial_bound", r.trivial_bound}};
  return dump(j);
}

SpectralReport spectral_report_from_json(std::string_view text) {
  const json j = json::parse(text);
  SpectralReport r;
  r.ring = j.at("ring").get<std::string>();
  r.d = j.at("d").get<std::size_t>();
  r.t_label = j.at("t").get<std::string>();
  r.norm_W = read_optional(j, "norm_W");
  r.norm_V = read_optional(j, "norm_V");
  r.salem = read_optional(j, "salem");
  r.method = j.at("method").get<std::string>();
  r.iterations = j.at("iterations").get<std::size_t>();
  r.residual = j.at("residual").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.converged = j.at("converged").get<bool>();
  r.trivial_bound = j.at("trivial_bound").get<double>();
  return r;
}

std::string checks_json(const std::vector<TheoremCheck>& checks, const std::string& suite) {
  json list = json::array(), failed = json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    list.push_back(check_to_json(c));
    if (c.passed) {
      ++passed;
    } else {
      failed.push_back(c.id);
    }
  }
  json j = {{"suite", suite},
            {"total", checks.size()},
            {"passed", passed},
            {"failed", checks.size() - passed},
            {"failed_ids", failed},
            {"checks", list}};
  return dump(j);
}

std::string edot_json(const EdotEReport& r) {
  json j = {{"ring", r.ring},
            {"d", r.d},
            {"t", r.t_label},
            {"measured_salem", r.measured_salem},
            {"incidences", r.incidences},
            {"threshold", r.threshold},
            {"corollary_threshold", optional_number(r.corollary_threshold)},
            {"corollary_vacuous", r.corollary_vacuous},
            {"trials", r.trials},
            {"set_size", r.set_size},
            {"failures", r.failures},
            {"seed", r.seed},
            {"vacuous", r.vacuous},
            {"minimal_working_size",
             r.minimal_working_size ? json(*r.minimal_working_size) : json(nullptr)}};
  return dump(j);
}

std::string graph_json(const GraphReport& r) {
  json j = {{"ring", r.ring},
            {"d", r.d},
            {"t", r.t_label},
            {"vertices", r.vertices},
            {"regular_degree", r.regular_degree ? json(*r.regular_degree) : json(nullptr)},
            {"components", r.components},
            {"big_component_size", r.big_component_size},
            {"connected", r.connected},
            {"connectivity_asserted", r.connectivity_asserted},
            {"laplacian_gap", r.laplacian_gap},
            {"laplacian_bound", r.laplacian_bound},
            {"adjacency_spectrum_extremes", {r.adjacency_min, r.adjacency_max}}};
  return dump(j);
}

std::string scan_json(const std::vector<ScanRow>& rows, std::size_t d) {
  json list = json::array();
  for (const auto& r : rows) {
    json row = {{"spec", r.spec},
                {"size", r.size},
                {"radical_size", r.radical_size},
                {"quotient_shape", r.quotient_shape},
                {"d", r.d},
                {"t", r.t_label},
                {"salem", optional_number(r.salem)},
                {"norm_W", optional_number(r.norm_W)},
                {"method", r.method},
                {"residual", r.residual},
                {"converged", r.converged},
                {"witness_lower", optional_number(r.witness_lower)}};
    if (!r.error.empty()) row["error"] = r.error;
    list.push_back(row);
  }
  return dump(json{{"d", d}, {"rows", list}});
}

std::string spectral_csv(const std::vector<SpectralReport>& reports) {
  std::string out = "ring,d,t,norm_W,norm_V,salem,method,iterations,residual,tolerance,converged,trivial_bound\n";
  for (const auto& r : reports) {
    out += csv_field(r.ring) + ',' + std::to_string(r.d) + ',' + csv_field(r.t_label) + ',' +
           csv_optional(r.norm_W) + ',' + csv_optional(r.norm_V) + ',' + csv_optional(r.salem) + ',' +
           r.method + ',' + std::to_string(r.iterations) + ',' + format_g12(r.residual) + ',' +
           format_g12(r.tolerance) + ',' + (r.converged ? "true" : "false") + ',' +
           format_g12(r.trivial_bound) + '\n';
  }
  return out;
}

std::string checks_csv(const std::vector<TheoremCheck>& checks) {
  std::string out = "id,instance,direction,claimed_bound,observed,margin,passed\n";
  for (const auto& c : checks) {
    out += csv_field(c.id) + ',' + csv_field(c.instance) + ',' + to_string(c.direction) + ',' +
           format_g12(c.claimed_bound) + ',' + format_g12(c.observed) + ',' + format_g12(c.margin) +
           ',' + (c.passed ? "true" : "false") + '\n';
  }
  return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "spec,size,radical_size,quotient_shape,d,t_label,salem,norm_W,method,residual,converged\n";
  for (const auto& r : rows) {
    out += csv_field(r.spec) + ',' + std::to_string(r.size) + ',' + std::to_string(r.radical_size) +
           ',' + csv_field(r.quotient_shape) + ',' + std::to_string(r.d) + ',' + csv_field(r.t_label) +
           ',' + csv_optional(r.salem) + ',' + csv_optional(r.norm_W) + ',' + r.method + ',' +
           format_g12(r.residual) + ',' + (r.converged ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace finring
