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


// Command dispatch shared by the finring executable and the Python module.

#ifndef FINRING_CLI_HPP_
#define FINRING_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "finring/io.hpp"
#include "finring/ring_spec.hpp"

namespace finring {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;  // parse, argument and construction errors
inline constexpr int kExitScale = 3;
inline constexpr int kExitNotConverged = 4;
inline constexpr int kExitInternal = 5;

// Named ring families for `scan --family`: fields, local, semisimple,
// separation, default.
std::vector<std::string> family_names();
std::vector<RingSpec> scan_family(const std::string& name);

// One-line JSON diagnostic {"error": kind, "message": message}.
void write_diagnostic(std::ostream& err, const std::string& kind, const std::string& message);

// Runs one command. Reports go to `out` (or config.output), diagnostics
// to `err` as single-line JSON objects.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace finring

#endif  // FINRING_CLI_HPP_
