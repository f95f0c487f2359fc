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


// finring command-line tool. Every flag maps onto a RunConfig key, so a
// --config file uses the same names; flags given on the command line win.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "finring/cli.hpp"
#include "finring/error.hpp"
#include "finring/io.hpp"

namespace {

struct Flags {
  std::vector<std::string> rings;
  std::map<std::string, std::string> values;
  std::string config_path;
};

void add_flags(CLI::App* sub, Flags& flags) {
  sub->add_option("--ring", flags.rings, "ring spec, e.g. gf(9) or mat(2,gf(2)); repeatable");
  const std::vector<std::pair<const char*, const char*>> options = {
      {"d", "dimension d >= 2 (default 2)"},
      {"t", "unit label, or all-units (default: the ring's one)"},
      {"tol", "relative Rayleigh-quotient tolerance (default 1e-10)"},
      {"seed", "random seed (default 42)"},
      {"workers", "worker threads, 0 = available parallelism"},
      {"output", "output path, - for stdout"},
      {"format", "json, csv or text"},
      {"suite", "verify suite name (default all)"},
      {"trials", "E.E trials (default 200)"},
      {"method", "auto, dense-svd or power-iteration"},
      {"cache-dir", "result cache directory (env FINRING_CACHE_DIR)"},
      {"family", "scan family: fields, local, semisimple, separation, default"},
      {"dump-adjacency", "write the x_index,y_index adjacency CSV here"},
  };
  for (const auto& [name, help] : options) {
    sub->add_option(std::string("--") + name, flags.values[name], help);
  }
  sub->add_option("--config", flags.config_path, "key=value config file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finring: incidence operators and Salem numbers over finite rings"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"info", "ring structure summary"},
      {"salem", "operator norms and the Salem number of A_t"},
      {"verify", "run instance checks (--suite, or every check for each --ring)"},
      {"scan", "Salem-number table over a ring family"},
      {"edot", "randomized E.E experiment"},
      {"graph", "dot-product graph over a finite field"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    subs.push_back(app.add_subcommand(name, help));
    add_flags(subs.back(), flags);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    finring::write_diagnostic(std::cerr, "usage", e.what());
    return finring::kExitUsage;
  }

  finring::RunConfig config;
  try {
    if (!flags.config_path.empty()) {
      std::ifstream in(flags.config_path);
      if (!in) throw finring::ArgumentError("cannot read config file " + flags.config_path);
      std::stringstream text;
      text << in.rdbuf();
      config = finring::parse_config(text.str());
    }
    for (auto* sub : subs) {
      if (!sub->parsed()) continue;
      config.command = finring::parse_command(sub->get_name());
      if (sub->count("--ring") > 0) config.rings = flags.rings;
      for (const auto& [name, value] : flags.values) {
        if (sub->count(std::string("--") + name) > 0) finring::apply_setting(config, name, value);
      }
    }
  } catch (const std::exception& e) {
    finring::write_diagnostic(std::cerr, "argument", e.what());
    return finring::kExitUsage;
  }
  return finring::run(config, std::cout, std::cerr);
}
