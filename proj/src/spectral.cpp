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

#include "finring/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "finring/error.hpp"
#include "finring/parallel.hpp"

namespace finring {
namespace {

double dot(std::span<const double> a, std::span<const double> b, std::size_t workers) {
  return deterministic_reduce<double>(a.size(), workers, [&](std::size_t begin, std::size_t end) {
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += a[i] * b[i];
    return acc;
  });
}

void project_mean_zero(std::span<double> v, std::size_t workers) {
  const double sum = deterministic_reduce<double>(v.size(), workers, [&](std::size_t b, std::size_t e) {
    double acc = 0.0;
    for (std::size_t i = b; i < e; ++i) acc += v[i];
    return acc;
  });
  const double mean = sum / static_cast<double>(v.size());
  for (auto& x : v) x -= mean;
}

SingularValue dense_solve(const IncidenceOperator& op, bool mean_zero) {
  const std::size_t n = op.points();
  if (n > kForcedDenseLimit) {
    throw ScaleError("dense solve limited to " + std::to_string(kForcedDenseLimit) + " points");
  }
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y : op.row(x)) M(static_cast<Eigen::Index>(x), y) += 1.0;
  }
  if (mean_zero) {
    // A P = A - (row sums) 1^T / n.
    const Eigen::VectorXd degree = M.rowwise().sum() / static_cast<double>(n);
    M.colwise() -= degree;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
  SingularValue out;
  out.method = SpectralMethod::dense_svd;
  out.value = svd.singularValues()(0);
  const Eigen::VectorXd v = svd.matrixV().col(0);
  const double lambda = out.value * out.value;
  out.residual = lambda > 0 ? (M.transpose() * (M * v) - lambda * v).norm() / lambda : 0.0;
  return out;
}

// Deterministic uniform(-1, 1) independent of the standard library's
// distribution implementations.
double uniform_pm1(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

SingularValue power_solve(const IncidenceOperator& op, bool mean_zero,
                          const SpectralOptions& options) {
  const std::size_t n = op.points();
  const std::size_t workers = options.workers;
  std::vector<double> v(n), w(n), u(n);
  SingularValue best;
  best.method = SpectralMethod::power_iteration;
  best.value = -1.0;
  bool all_converged = true;
  std::size_t total_iterations = 0;

  for (std::size_t restart = 0; restart < std::max<std::size_t>(options.restarts, 1); ++restart) {
    std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ull * restart);
    for (auto& x : v) x = uniform_pm1(rng);
    if (mean_zero) project_mean_zero(v, workers);
    double norm = std::sqrt(dot(v, v, workers));
    for (auto& x : v) x /= norm;

    double lambda = 0.0, previous = -1.0, residual = 0.0;
    bool converged = false;
    std::size_t it = 0;
    while (it < options.max_iterations) {
      ++it;
      op.apply(v, w, workers);
      lambda = dot(w, w, workers);
      op.apply_transpose(w, u, workers);
      if (mean_zero) project_mean_zero(u, workers);
      if (lambda == 0.0) {
        converged = true;
        break;
      }
      residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) residual += (u[i] - lambda * v[i]) * (u[i] - lambda * v[i]);
      residual = std::sqrt(residual) / lambda;
      norm = std::sqrt(dot(u, u, workers));
      for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / norm;
      if (it >= 3 && std::abs(lambda - previous) <= options.tol * lambda) {
        converged = true;
        break;
      }
      previous = lambda;
    }
    total_iterations += it;
    all_converged = all_converged && converged;
    const double sigma = std::sqrt(lambda);
    if (sigma > best.value) {
      best.value = sigma;
      best.residual = residual;
    }
  }
  best.iterations = total_iterations;
  best.converged = all_converged;
  return best;
}

std::string describe(const IncidenceOperator& op) {
  if (const auto& spec = op.ring()->spec()) return display_string(*spec);
  return op.ring()->description();
}

SpectralReport base_report(const IncidenceOperator& op, const SpectralOptions& options) {
  SpectralReport report;
  report.ring = describe(op);
  report.d = op.dimension();
  report.t_label = op.ring()->label(op.t());
  report.tolerance = options.tol;
  report.trivial_bound = static_cast<double>(std::max(op.max_row(), op.max_transpose_row()));
  return report;
}

double salem_scale(const IncidenceOperator& op) {
  return std::pow(static_cast<double>(op.ring()->size()), (op.dimension() - 1) / 2.0);
}

}  // namespace

std::string to_string(SpectralMethod method) {
  switch (method) {
    case SpectralMethod::automatic:
      return "auto";
    case SpectralMethod::dense_svd:
      return "dense-svd";
    case SpectralMethod::power_iteration:
      return "power-iteration";
  }
  return "auto";
}

SpectralMethod parse_method(const std::string& text) {
  if (text == "auto") return SpectralMethod::automatic;
  if (text == "dense-svd" || text == "dense") return SpectralMethod::dense_svd;
  if (text == "power-iteration" || text == "power") return SpectralMethod::power_iteration;
  throw ArgumentError("unknown spectral method '" + text + "'");
}

SingularValue largest_singular_value(const IncidenceOperator& op, bool mean_zero,
                                     const SpectralOptions& options) {
  if (!(options.tol > 0.0)) throw ArgumentError("tolerance must be positive");
  SpectralMethod method = options.method;
  if (method == SpectralMethod::automatic) {
    method = op.points() <= kDenseLimit ? SpectralMethod::dense_svd
                                        : SpectralMethod::power_iteration;
  }
  return method == SpectralMethod::dense_svd ? dense_solve(op, mean_zero)
                                             : power_solve(op, mean_zero, options);
}

SpectralReport norm_on_meanzero(const IncidenceOperator& op, const SpectralOptions& options) {
  SpectralReport report = base_report(op, options);
  const SingularValue w = largest_singular_value(op, true, options);
  report.norm_W = w.value;
  report.salem = w.value / salem_scale(op);
  report.method = to_string(w.method);
  report.iterations = w.iterations;
  report.residual = w.residual;
  report.converged = w.converged;
  return report;
}

SpectralReport norm_on_all(const IncidenceOperator& op, const SpectralOptions& options) {
  SpectralReport report = base_report(op, options);
  const SingularValue v = largest_singular_value(op, false, options);
  report.norm_V = v.value;
  report.method = to_string(v.method);
  report.iterations = v.iterations;
  report.residual = v.residual;
  report.converged = v.converged;
  return report;
}

SpectralReport spectral_report(const IncidenceOperator& op, const SpectralOptions& options) {
  SpectralReport report = norm_on_meanzero(op, options);
  const SingularValue v = largest_singular_value(op, false, options);
  report.norm_V = v.value;
  report.iterations += v.iterations;
  report.residual = std::max(report.residual, v.residual);
  report.converged = report.converged && v.converged;
  return report;
}

}  // namespace finring
