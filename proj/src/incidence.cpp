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

#include "finring/incidence.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "finring/error.hpp"
#include "finring/parallel.hpp"

namespace finring {
namespace {

// For each b, the elements y with y*b = c (right) or b*y = c (left), grouped
// by c and ascending within a group.
class Preimages {
 public:
  Preimages(const RingTable& ring, bool left) : m_(ring.size()) {
    offsets_.assign(m_ * (m_ + 1), 0);
    members_.resize(m_ * m_);
    std::vector<std::uint32_t> fill(m_);
    for (Elem b = 0; b < m_; ++b) {
      std::uint32_t* off = offsets_.data() + b * (m_ + 1);
      for (Elem y = 0; y < m_; ++y) ++off[(left ? ring.mul(b, y) : ring.mul(y, b)) + 1];
      for (std::size_t c = 0; c < m_; ++c) off[c + 1] += off[c];
      std::copy(off, off + m_, fill.begin());
      for (Elem y = 0; y < m_; ++y) {
        const Elem c = left ? ring.mul(b, y) : ring.mul(y, b);
        members_[b * m_ + fill[c]++] = static_cast<std::uint16_t>(y);
      }
    }
  }

  std::span<const std::uint16_t> of(Elem b, Elem c) const {
    const std::uint32_t* off = offsets_.data() + b * (m_ + 1);
    return {members_.data() + b * m_ + off[c], members_.data() + b * m_ + off[c + 1]};
  }

 private:
  std::size_t m_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint16_t> members_;
};

// Enumerates the solutions y of sum_i prod(y_i, x_i) = t for one x, where
// prod is y*x (rows) or x*y (transpose rows). Coordinates 1..d-1 run over an
// odometer and coordinate 0 is solved from the preimage table, so solutions
// come out in ascending grid order.
template <class Emit>
void for_each_solution(const RingTable& ring, const Preimages& pre, bool left, std::size_t d,
                       Elem t, std::span<const Elem> x, Emit&& emit) {
  const std::size_t m = ring.size();
  const std::size_t k = d - 1;
  auto prod = [&](Elem y, Elem xi) { return left ? ring.mul(xi, y) : ring.mul(y, xi); };
  std::vector<Elem> z(k, 0);
  // suffix[i] = sum over j >= i of prod(z_j, x_{j+1}); all zero initially.
  std::vector<Elem> suffix(k + 1, 0);
  std::size_t base = 0;
  while (true) {
    emit(base, pre.of(x[0], ring.sub(t, suffix[0])));
    std::size_t i = 0;
    while (i < k && ++z[i] == m) z[i++] = 0;
    if (i == k) break;
    suffix[i] = ring.add(prod(z[i], x[i + 1]), suffix[i + 1]);
    for (std::size_t j = i; j-- > 0;) suffix[j] = suffix[j + 1];
    base += m;
  }
}

SparseRows solve_all(const RingPtr& ring_ptr, std::size_t d, Elem t, bool left,
                     std::size_t workers) {
  const RingTable& ring = *ring_ptr;
  const PointCodec codec(ring.size(), d);
  const std::size_t n = codec.points();
  const Preimages pre(ring, left);

  SparseRows out;
  out.offsets.assign(n + 1, 0);
  parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<Elem> x(d);
    for (std::size_t p = begin; p < end; ++p) {
      codec.decode(p, x);
      std::uint64_t count = 0;
      for_each_solution(ring, pre, left, d, t, x,
                        [&](std::size_t, std::span<const std::uint16_t> ys) { count += ys.size(); });
      out.offsets[p + 1] = count;
    }
  });
  for (std::size_t p = 0; p < n; ++p) out.offsets[p + 1] += out.offsets[p];
  if (out.offsets[n] > kMaxIncidences) {
    throw ScaleError("incidence count " + std::to_string(out.offsets[n]) +
                     " exceeds the supported limit of 10^8");
  }
  out.indices.resize(out.offsets[n]);
  parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<Elem> x(d);
    for (std::size_t p = begin; p < end; ++p) {
      codec.decode(p, x);
      std::uint32_t* slot = out.indices.data() + out.offsets[p];
      for_each_solution(ring, pre, left, d, t, x,
                        [&](std::size_t base, std::span<const std::uint16_t> ys) {
                          for (auto y : ys) *slot++ = static_cast<std::uint32_t>(base + y);
                        });
    }
  });
  return out;
}

std::size_t widest_row(const SparseRows& rows) {
  std::size_t widest = 0;
  for (std::size_t i = 0; i + 1 < rows.offsets.size(); ++i) widest = std::max(widest, rows.row_size(i));
  return widest;
}

template <class T>
void sparse_apply(const SparseRows& rows, std::span<const T> in, std::span<T> out,
                  std::size_t workers) {
  const std::size_t n = rows.offsets.size() - 1;
  if (in.size() != n || out.size() != n) throw ArgumentError("vector length does not match operator");
  parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      T acc{};
      for (auto y : rows.row(x)) acc += in[y];
      out[x] = acc;
    }
  });
}

void check_function(const IncidenceOperator& op, const GridFunction& f) {
  if (f.ring() != op.ring() || f.dimension() != op.dimension()) {
    throw ArgumentError("function does not live on the operator's grid");
  }
}

}  // namespace

IncidenceOperator::IncidenceOperator(RingPtr ring, std::size_t d, Elem t, SparseRows rows,
                                     SparseRows transpose_rows)
    : ring_(std::move(ring)),
      d_(d),
      t_(t),
      rows_(std::move(rows)),
      transpose_rows_(std::move(transpose_rows)),
      max_row_(widest_row(rows_)),
      max_transpose_row_(widest_row(transpose_rows_)) {}

void IncidenceOperator::apply(std::span<const double> in, std::span<double> out,
                              std::size_t workers) const {
  sparse_apply<double>(rows_, in, out, workers);
}

void IncidenceOperator::apply_transpose(std::span<const double> in, std::span<double> out,
                                        std::size_t workers) const {
  sparse_apply<double>(transpose_rows_, in, out, workers);
}

IncidenceOperator build_incidence(const RingPtr& ring, std::size_t d, Elem t,
                                  std::size_t workers) {
  if (!ring) throw ArgumentError("null ring");
  if (d < 2) throw ArgumentError("dimension must be at least 2");
  if (t >= ring->size() || !ring->is_unit(t)) throw ArgumentError("t must be a unit");
  const std::size_t m = ring->size();
  const double points = static_cast<double>(grid_size(m, d));
  // Rows of points with a unit coordinate hold exactly m^{d-1} entries.
  const double no_unit = std::pow(static_cast<double>(m - ring->units().size()), double(d));
  const double lower = (points - no_unit) * points / static_cast<double>(m);
  if (lower > static_cast<double>(kMaxIncidences)) {
    std::ostringstream msg;
    msg << "incidence count is at least " << lower << ", above the supported limit of 10^8";
    throw ScaleError(msg.str());
  }
  SparseRows rows = solve_all(ring, d, t, /*left=*/false, workers);
  SparseRows transpose_rows = solve_all(ring, d, t, /*left=*/true, workers);
  if (rows.indices.size() != transpose_rows.indices.size()) {
    throw std::logic_error("row and column incidence counts differ");
  }
  return IncidenceOperator(ring, d, t, std::move(rows), std::move(transpose_rows));
}

GridFunction apply(const IncidenceOperator& op, const GridFunction& f, std::size_t workers) {
  check_function(op, f);
  std::vector<Complex> out(f.size());
  sparse_apply<Complex>(op.rows(), f.values(), out, workers);
  return GridFunction(op.ring(), op.dimension(), std::move(out));
}

GridFunction apply_transpose(const IncidenceOperator& op, const GridFunction& g,
                             std::size_t workers) {
  check_function(op, g);
  std::vector<Complex> out(g.size());
  sparse_apply<Complex>(op.transpose_rows(), g.values(), out, workers);
  return GridFunction(op.ring(), op.dimension(), std::move(out));
}

GridFunction mean_zero_project(const GridFunction& f) {
  const Complex mean = f.sum() / static_cast<double>(f.size());
  std::vector<Complex> values(f.values().begin(), f.values().end());
  for (auto& v : values) v -= mean;
  GridFunction out(f.ring(), f.dimension(), std::move(values));
  if (!out.certify_mean_zero()) {
    // Cancellation left a visible residue; a second pass removes it.
    const Complex residue = out.sum() / static_cast<double>(out.size());
    for (auto& v : out.mutable_values()) v -= residue;
    out.certify_mean_zero();
  }
  return out;
}

std::uint64_t count_incidences(const IncidenceOperator& op) { return op.entries(); }

double operator_ratio(const IncidenceOperator& op, const GridFunction& f, std::size_t workers) {
  const double norm = f.norm();
  if (norm == 0.0) throw ArgumentError("ratio of the zero function");
  return apply(op, f, workers).norm() / norm;
}

std::uint64_t nu(const IncidenceOperator& op, std::span<const std::uint32_t> set) {
  std::vector<char> member(op.points(), 0);
  for (auto x : set) {
    if (x >= op.points()) throw ArgumentError("set point outside the grid");
    member[x] = 1;
  }
  // Pairs (x, y) in E x E with y.x = t, i.e. x.y = t after renaming.
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < op.points(); ++x) {
    if (!member[x]) continue;
    for (auto y : op.row(x)) count += member[y];
  }
  return count;
}

void write_adjacency_csv(const IncidenceOperator& op, std::ostream& out) {
  out << "x_index,y_index\n";
  for (std::size_t x = 0; x < op.points(); ++x) {
    for (auto y : op.row(x)) out << x << ',' << y << '\n';
  }
}

}  // namespace finring
