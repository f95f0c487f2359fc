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

// Largest singular values of the incidence operator on all functions (V)
// and on mean-zero functions (W, through A P with P the mean-zero projector).

#ifndef FINRING_SPECTRAL_HPP_
#define FINRING_SPECTRAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "finring/incidence.hpp"

namespace finring {

enum class SpectralMethod { automatic, dense_svd, power_iteration };

std::string to_string(SpectralMethod method);
// "auto", "dense-svd", "power-iteration".
SpectralMethod parse_method(const std::string& text);

inline constexpr std::size_t kDenseLimit = 512;
// Largest grid a forced dense solve accepts.
inline constexpr std::size_t kForcedDenseLimit = 4096;

struct SpectralOptions {
  double tol = 1e-10;
  SpectralMethod method = SpectralMethod::automatic;
  std::size_t workers = 0;
  std::uint64_t seed = 42;
  std::size_t restarts = 8;
  std::size_t max_iterations = 100000;
};

struct SpectralReport {
  std::string ring;  // display string
  std::size_t d = 0;
  std::string t_label;
  std::optional<double> norm_W;
  std::optional<double> norm_V;
  std::optional<double> salem;
  std::string method;
  std::size_t iterations = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool converged = true;
  // c * m^{d-1}: the larger of the widest row and widest column.
  double trivial_bound = 0.0;
};

// One largest-singular-value solve.
struct SingularValue {
  double value = 0.0;
  SpectralMethod method = SpectralMethod::dense_svd;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = true;
};

SingularValue largest_singular_value(const IncidenceOperator& op, bool mean_zero,
                                     const SpectralOptions& options = {});

SpectralReport norm_on_meanzero(const IncidenceOperator& op, const SpectralOptions& options = {});
SpectralReport norm_on_all(const IncidenceOperator& op, const SpectralOptions& options = {});
// Both norms in one report.
SpectralReport spectral_report(const IncidenceOperator& op, const SpectralOptions& options = {});

}  // namespace finring

#endif  // FINRING_SPECTRAL_HPP_
