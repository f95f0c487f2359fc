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


// Run configuration, the on-disk result cache and report serialization.

#ifndef FINRING_IO_HPP_
#define FINRING_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finring/spectral.hpp"
#include "finring/verify.hpp"

namespace finring {

enum class Command { info, salem, verify, scan, edot, graph };
enum class Format { json, csv, text };

std::string to_string(Command command);
std::string to_string(Format format);
Command parse_command(std::string_view text);
Format parse_format(std::string_view text);

struct RunConfig {
  Command command = Command::info;
  std::vector<std::string> rings;  // ring-spec strings, in order
  std::size_t d = 2;
  std::string t_label;  // empty means the ring's one; "all-units" sweeps R^x
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::size_t workers = 0;  // 0: available parallelism
  std::string output = "-";  // "-" is standard output
  Format format = Format::json;
  std::string suite = "all";
  std::size_t trials = 200;
  SpectralMethod method = SpectralMethod::automatic;
  std::string cache_dir;  // empty: FINRING_CACHE_DIR, else no cache
  std::string family;
  std::string dump_adjacency;

  bool operator==(const RunConfig&) const = default;
};

// One "key=value" line per field; repeated "ring=" lines for several rings.
std::string serialize_config(const RunConfig& config);

// Parses the serialize_config surface onto `base`. Blank lines and lines
// starting with '#' are skipped. ArgumentError names the offending line.
RunConfig parse_config(std::string_view text, RunConfig base = {});

// Applies one key=value pair; keys are the flag names without dashes, with
// '-' and '_' interchangeable.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

// Spectral reports on disk, keyed by canonical ring spec, d, t label, tol,
// method and seed. Writes go through a temporary file and a rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory);

  static std::string key(const std::string& canonical_spec, std::size_t d,
                         const std::string& t_label, double tol, SpectralMethod method,
                         std::uint64_t seed);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& report_json) const;
  std::filesystem::path path_for(const std::string& key) const;
  const std::filesystem::path& directory() const { return directory_; }

 private:
  std::filesystem::path directory_;
};

std::uint64_t fnv1a(std::string_view text);

// "%.12g", used for every float in CSV and text output.
std::string format_g12(double value);

// JSON text (pretty-printed, trailing newline) of the reports below.
std::string spectral_report_json(const SpectralReport& report);
SpectralReport spectral_report_from_json(std::string_view text);
std::string checks_json(const std::vector<TheoremCheck>& checks, const std::string& suite);
std::string edot_json(const EdotEReport& report);
std::string graph_json(const GraphReport& report);
std::string scan_json(const std::vector<ScanRow>& rows, std::size_t d);

std::string spectral_csv(const std::vector<SpectralReport>& reports);
std::string checks_csv(const std::vector<TheoremCheck>& checks);
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace finring

#endif  // FINRING_IO_HPP_
