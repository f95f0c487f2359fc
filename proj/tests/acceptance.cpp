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


// One PASS/FAIL line per acceptance criterion. Exit status is the number
// of failing criteria, capped at 1.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "finring/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  const char* suite;
};

constexpr Criterion kCriteria[] = {
    {1, "field upper bound", "fields"},
    {2, "F2 exact trivial-character value", "boolean"},
    {3, "unit independence", "units"},
    {4, "N(R) closed form", "counts"},
    {5, "matrix-ring witness", "matrix"},
    {6, "product factorization", "products"},
    {7, "Jacobson amplification", "jacobson"},
    {8, "E.E guarantee and ideal obstruction", "edot"},
    {9, "dot-product graph properties", "graph"},
    {10, "oracle equivalence", "oracle"},
};

}  // namespace

int main() {
  int failing = 0;
  for (const auto& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<finring::TheoremCheck> checks;
    std::string error;
    try {
      checks = finring::run_suite(c.suite);
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::size_t passed = 0;
    std::string first_failure;
    for (const auto& check : checks) {
      if (check.passed) {
        ++passed;
      } else if (first_failure.empty()) {
        first_failure = check.id + " " + check.instance;
      }
    }
    const bool ok = error.empty() && !checks.empty() && passed == checks.size();
    failing += !ok;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s): %zu/%zu checks, %.1fs", ok ? "PASS" : "FAIL", c.number, c.title,
                passed, checks.size(), seconds);
    if (!error.empty()) std::printf(", error: %s", error.c_str());
    if (!first_failure.empty()) std::printf(", first failure: %s", first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failing == 0 ? 0 : 1;
}
