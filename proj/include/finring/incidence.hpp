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

// The dot-product incidence operator on R^d:
//
//   (A f)(x) = sum over y with y.x = t of f(y),   y.x = y_1 x_1 + ... + y_d x_d
//
// with every product taken y on the left. Rows and columns are stored
// separately so noncommutative rings never have their operands swapped.

#ifndef FINRING_INCIDENCE_HPP_
#define FINRING_INCIDENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "finring/harmonic.hpp"
#include "finring/ring.hpp"

namespace finring {

inline constexpr std::uint64_t kMaxIncidences = 100'000'000;

// Compressed sparse rows of a 0/1 matrix.
struct SparseRows {
  std::vector<std::uint64_t> offsets;  // points + 1
  std::vector<std::uint32_t> indices;

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {indices.data() + offsets[i], indices.data() + offsets[i + 1]};
  }
  std::size_t row_size(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
};

class IncidenceOperator {
 public:
  IncidenceOperator(RingPtr ring, std::size_t d, Elem t, SparseRows rows,
                    SparseRows transpose_rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t dimension() const { return d_; }
  Elem t() const { return t_; }
  std::size_t points() const { return rows_.offsets.size() - 1; }

  // { y : y.x = t }, sorted.
  std::span<const std::uint32_t> row(std::size_t x) const { return rows_.row(x); }
  // { y : x.y = t }, sorted. Equals column x of the operator.
  std::span<const std::uint32_t> transpose_row(std::size_t x) const {
    return transpose_rows_.row(x);
  }
  const SparseRows& rows() const { return rows_; }
  const SparseRows& transpose_rows() const { return transpose_rows_; }

  std::uint64_t entries() const { return rows_.indices.size(); }
  std::size_t max_row() const { return max_row_; }
  std::size_t max_transpose_row() const { return max_transpose_row_; }

  // out = A in and out = A^T in. Each output slot is summed sequentially,
  // so results are bit-identical for any worker count.
  void apply(std::span<const double> in, std::span<double> out, std::size_t workers = 0) const;
  void apply_transpose(std::span<const double> in, std::span<double> out,
                       std::size_t workers = 0) const;

 private:
  RingPtr ring_;
  std::size_t d_;
  Elem t_;
  SparseRows rows_;
  SparseRows transpose_rows_;
  std::size_t max_row_ = 0;
  std::size_t max_transpose_row_ = 0;
};

// Throws ArgumentError for d < 2 or non-unit t, ScaleError when m^d > 10^7
// or the incidence count exceeds 10^8.
IncidenceOperator build_incidence(const RingPtr& ring, std::size_t d, Elem t,
                                  std::size_t workers = 0);

GridFunction apply(const IncidenceOperator& op, const GridFunction& f, std::size_t workers = 0);
GridFunction apply_transpose(const IncidenceOperator& op, const GridFunction& g,
                             std::size_t workers = 0);

// f - mean(f), certified mean-zero.
GridFunction mean_zero_project(const GridFunction& f);

// N(R): number of pairs (x, y) with y.x = t.
std::uint64_t count_incidences(const IncidenceOperator& op);

// ||A f|| / ||f||.
double operator_ratio(const IncidenceOperator& op, const GridFunction& f,
                      std::size_t workers = 0);

// |{(x, y) in E x E : x.y = t}| for E given by grid indices.
std::uint64_t nu(const IncidenceOperator& op, std::span<const std::uint32_t> set);

// One "x_index,y_index" line per nonzero entry.
void write_adjacency_csv(const IncidenceOperator& op, std::ostream& out);

}  // namespace finring

#endif  // FINRING_INCIDENCE_HPP_
