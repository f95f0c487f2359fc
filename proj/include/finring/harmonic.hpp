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

// Additive characters of R^d and functions on R^d.
//
// A character is named by a dual vector a in R^d through a fixed
// nondegenerate biadditive pairing beta : R x R -> (1/D)Z/Z, and evaluates
// to exp(2 pi i sum_k beta(a_k, x_k)). Phases stay exact integers mod D
// until the final lookup into a table of D-th roots of unity.

#ifndef FINRING_HARMONIC_HPP_
#define FINRING_HARMONIC_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

using Complex = std::complex<double>;

// m^d with overflow and scale checks.
std::size_t grid_size(std::size_t m, std::size_t d);

// Mixed-radix codec for points of R^d, first coordinate least significant.
class PointCodec {
 public:
  PointCodec(std::size_t m, std::size_t d);

  std::size_t points() const { return points_; }
  std::size_t dimension() const { return d_; }
  std::size_t radix() const { return m_; }

  std::size_t encode(std::span<const Elem> coords) const;
  void decode(std::size_t index, std::span<Elem> coords) const;
  std::vector<Elem> decode(std::size_t index) const;

 private:
  std::size_t m_;
  std::size_t d_;
  std::size_t points_;
};

// Cyclic decomposition of the additive group: every element is
// sum_i coords[i] * generators[i] with 0 <= coords[i] < orders[i].
struct AdditiveBasis {
  std::vector<Elem> generators;
  std::vector<std::uint32_t> orders;
  std::vector<std::vector<std::uint32_t>> coords;  // per element
};

AdditiveBasis additive_basis(const RingTable& ring);

class Pairing {
 public:
  Pairing(RingPtr ring, std::uint32_t denominator, std::vector<std::uint16_t> table);

  const RingPtr& ring() const { return ring_; }
  std::uint32_t denominator() const { return denominator_; }
  // beta(a, x) * D, reduced mod D.
  std::uint32_t numerator(Elem a, Elem x) const { return table_[a * ring_->size() + x]; }

 private:
  RingPtr ring_;
  std::uint32_t denominator_;
  std::vector<std::uint16_t> table_;
};

// zmod: ax/n. gf: Tr(ax)/p. mat: field pairing of 1 with trace(AX).
// prod: sum over factors. trunc: coefficientwise field pairing.
// Quotient rings fall back to the cyclic-coordinate pairing of their
// additive group. Nondegeneracy is checked exhaustively.
Pairing build_pairing(const RingPtr& ring);

struct Character {
  std::vector<Elem> dual;

  std::size_t dimension() const { return dual.size(); }
  bool trivial() const;
  bool operator==(const Character&) const = default;
};

Character trivial_character(std::size_t d);
// Dual vector stored at a mixed-radix grid index.
Character character_at(std::size_t dual_index, std::size_t m, std::size_t d);

// Exact phase numerator sum_k beta(a_k, x_k) mod D.
std::uint32_t char_phase(const Pairing& pairing, const Character& chi,
                         std::span<const Elem> x);
Complex char_eval(const Pairing& pairing, const Character& chi, std::span<const Elem> x);

// e^{2 pi i k / D} for k in [0, D).
std::vector<Complex> roots_of_unity(std::uint32_t denominator);

// Complex-valued function on R^d, dense in grid order.
class GridFunction {
 public:
  GridFunction(RingPtr ring, std::size_t d);
  GridFunction(RingPtr ring, std::size_t d, std::vector<Complex> values);

  const RingPtr& ring() const { return ring_; }
  std::size_t dimension() const { return d_; }
  std::size_t size() const { return values_.size(); }

  std::span<const Complex> values() const { return values_; }
  // Mutable access drops the mean-zero certificate.
  std::span<Complex> mutable_values() {
    mean_zero_ = false;
    return values_;
  }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  double norm() const;
  double norm_squared() const;
  Complex sum() const;

  bool mean_zero() const { return mean_zero_; }
  // Sets the flag iff |sum| <= 1e-9 * ||f|| * m^{d/2}; returns the flag.
  bool certify_mean_zero();

 private:
  RingPtr ring_;
  std::size_t d_;
  std::vector<Complex> values_;
  bool mean_zero_ = false;
};

// Exact phase numerators of chi over the whole grid.
std::vector<std::uint32_t> character_phases(const Pairing& pairing, const Character& chi);
GridFunction character_grid(const Pairing& pairing, const Character& chi);

// fhat(a) = m^{-d} sum_x f(x) chi_a(x), indexed by the dual's grid index.
std::vector<Complex> fourier_transform(const Pairing& pairing, const GridFunction& f,
                                       std::size_t workers = 0);

// f(x) = sum_a fhat(a) conj(chi_a(x)); exact inverse of fourier_transform.
GridFunction inverse_fourier(const Pairing& pairing, std::span<const Complex> coefficients,
                             std::size_t d, std::size_t workers = 0);

// Character of R^d that factors through the coordinatewise projection:
// chi(x) = chi_tilde(p(x)). Throws ArgumentError on mismatched rings.
Character pullback_character(const QuotientMap& projection, const Pairing& source_pairing,
                             const Pairing& quotient_pairing, const Character& chi_tilde);

// chi(A_1..A_d) = chi_F(sum of upper-left entries), chi_F the field
// character with dual 1. Dual element is E_11 in every coordinate.
Character matrix_witness_character(const Pairing& pairing, std::size_t d);

}  // namespace finring

#endif  // FINRING_HARMONIC_HPP_
