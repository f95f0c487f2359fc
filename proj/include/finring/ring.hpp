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

#ifndef FINRING_RING_HPP_
#define FINRING_RING_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finring/ring_spec.hpp"

namespace finring {

// Index of a ring element inside its RingTable.
using Elem = std::uint32_t;

enum class RingKind { zmod, gf, mat, prod, trunc, quotient };

class RingTable;
using RingPtr = std::shared_ptr<const RingTable>;

// Raw tables handed to RingTable; the constructor derives everything else
// (negation, units, inverses, flags) and checks the ring axioms.
struct RingTables {
  std::size_t size = 0;
  std::vector<std::uint16_t> add;  // size x size, row-major
  std::vector<std::uint16_t> mul;  // size x size, row-major
  std::vector<std::string> labels;
  Elem one = 0;
};

// Materialized arithmetic of a finite unital ring. Immutable once built.
//
// Element 0 is always the additive identity. Named constructors order their
// elements mixed-radix over cyclic additive coordinates, first coordinate
// least significant; additive_radices() exposes those coordinates.
class RingTable {
 public:
  struct Structure {
    RingKind kind = RingKind::quotient;
    std::optional<RingSpec> spec;
    // prod: the factors; mat and trunc: the base field.
    std::vector<RingPtr> components;
    std::vector<std::uint32_t> additive_radices;
    std::uint32_t matrix_dim = 0;   // mat only
    std::uint32_t trunc_length = 0; // trunc only
    std::string description;
  };

  RingTable(RingTables tables, Structure structure);

  std::size_t size() const { return size_; }
  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  // Sorted unit list.
  const std::vector<Elem>& units() const { return units_; }
  bool is_unit(Elem a) const { return inv_[a] != kNoInverse; }
  std::optional<Elem> inverse(Elem a) const;
  // Precondition: is_unit(a).
  Elem unit_inverse(Elem a) const { return inv_[a]; }

  // Additive order of an element.
  std::uint32_t additive_order(Elem a) const;
  // Exponent of the additive group.
  std::uint32_t additive_exponent() const { return exponent_; }

  bool commutative() const { return commutative_; }

  const std::string& label(Elem a) const { return labels_[a]; }
  // Accepts an element label or "#<index>".
  std::optional<Elem> find(std::string_view label) const;

  RingKind kind() const { return structure_.kind; }
  const std::optional<RingSpec>& spec() const { return structure_.spec; }
  const std::vector<RingPtr>& components() const { return structure_.components; }
  const std::vector<std::uint32_t>& additive_radices() const {
    return structure_.additive_radices;
  }
  std::uint32_t matrix_dim() const { return structure_.matrix_dim; }
  std::uint32_t trunc_length() const { return structure_.trunc_length; }
  // Display string for named constructors, a descriptive tag otherwise.
  const std::string& description() const { return structure_.description; }

  // mat: row-major entries (entry (0,0) first) as base-field elements.
  std::vector<Elem> matrix_entries(Elem a) const;
  Elem from_matrix_entries(std::span<const Elem> entries) const;
  // prod: per-factor components, leftmost factor first.
  std::vector<Elem> product_parts(Elem a) const;
  Elem from_product_parts(std::span<const Elem> parts) const;

 private:
  static constexpr Elem kNoInverse = 0xFFFFFFFFu;

  void derive();
  void check_axioms() const;

  std::size_t size_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> units_;
  std::vector<std::string> labels_;
  Elem one_;
  std::uint32_t exponent_ = 1;
  bool commutative_ = false;
  Structure structure_;
};

RingPtr build_ring(const RingSpec& spec);

enum class Side { left, right, two_sided };

// Additive subgroup of a ring closed under multiplication on `side`.
struct Ideal {
  RingPtr ring;
  std::vector<Elem> members;  // sorted
  Side side = Side::two_sided;

  std::size_t size() const { return members.size(); }
  bool contains(Elem a) const;
};

// Checks zero membership, additive closure and closure under the claimed side.
bool is_ideal(const RingTable& ring, std::span<const Elem> members, Side side);

// J = { s : 1 + r s is a unit for every r }, checked against 1 + s r as well.
Ideal jacobson_radical(const RingPtr& ring);

struct QuotientMap {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> projection;       // source element -> coset index
  std::vector<Elem> representatives;  // coset index -> smallest member
};

QuotientMap quotient_ring(const Ideal& ideal);

// Anti-automorphism phi with phi(xy) = phi(y) phi(x): transpose for matrix
// rings, identity for commutative rings, componentwise for products.
std::optional<std::vector<Elem>> opposite_iso(const RingTable& ring);

// { R x : x in R }, deduplicated, ordered by size then members.
std::vector<Ideal> principal_left_ideals(const RingPtr& ring);

}  // namespace finring

#endif  // FINRING_RING_HPP_
