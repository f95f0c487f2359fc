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

// Symbolic description of the finite rings the library can materialize.
//
//   zmod(n)          Z/nZ, n >= 2
//   gf(p, k, f)      F_p[a]/(f), f monic irreducible of degree k
//   mat(n, gf)       n x n matrices over a finite field
//   prod(R1, ...)    direct product
//   trunc(gf, k)     F_q[e]/(e^k), k >= 2
//
// Every constructor has an additive group that is a product of cyclic
// groups, and its elements are ordered mixed-radix with the first
// coordinate least significant (see RingTable).

#ifndef FINRING_RING_SPEC_HPP_
#define FINRING_RING_SPEC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace finring {

struct ZModSpec {
  std::uint32_t n = 2;
  bool operator==(const ZModSpec&) const = default;
};

struct GfSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  // Little-endian coefficients c_0..c_k of the monic modulus.
  std::vector<std::uint32_t> modulus;
  bool operator==(const GfSpec&) const = default;
};

struct MatSpec {
  std::uint32_t n = 1;
  GfSpec base;
  bool operator==(const MatSpec&) const = default;
};

struct TruncSpec {
  GfSpec base;
  std::uint32_t k = 2;
  bool operator==(const TruncSpec&) const = default;
};

struct RingSpec;

struct ProdSpec {
  std::vector<RingSpec> factors;
  bool operator==(const ProdSpec& other) const;
};

struct RingSpec {
  std::variant<ZModSpec, GfSpec, MatSpec, ProdSpec, TruncSpec> ctor;

  bool operator==(const RingSpec& other) const { return ctor == other.ctor; }
};

inline bool ProdSpec::operator==(const ProdSpec& other) const {
  return factors == other.factors;
}

// Convenience constructors. `gf` fills in the default modulus.
RingSpec zmod(std::uint32_t n);
RingSpec gf(std::uint32_t p, std::uint32_t k = 1);
RingSpec gf_q(std::uint32_t q);
RingSpec mat(std::uint32_t n, const GfSpec& base);
RingSpec prod(std::vector<RingSpec> factors);
RingSpec trunc(const GfSpec& base, std::uint32_t k);
GfSpec gf_spec(std::uint32_t p, std::uint32_t k = 1);

bool is_prime(std::uint64_t n);

// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(
    std::uint64_t q);

// Exhaustive search for a monic factor of degree 1..k/2 over Z/p.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

// Conway polynomial for small (p, k); otherwise the first irreducible monic
// polynomial in coefficient order.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);

// Throws ArgumentError or ConstructionError when a spec is malformed.
void validate(const RingSpec& spec);

// Element count; throws ScaleError when it exceeds the table limit.
std::uint64_t ring_size(const RingSpec& spec);

// Full form with every default expanded, e.g. "gf(3,2,[2,2,1])".
std::string canonical_string(const RingSpec& spec);

// Short human form, e.g. "gf(9)"; non-default moduli are kept explicit.
std::string display_string(const RingSpec& spec);

// Shape of R/J, e.g. "F2xF3" for zmod(6), "M2(F2)" for mat(2,gf(2)).
std::string quotient_shape(const RingSpec& spec);

// True when R/J is a single finite field.
bool quotient_is_field(const RingSpec& spec);

// True when the constructor is a field (gf, mat(1,gf), zmod(p)).
bool is_field(const RingSpec& spec);

// Largest table size build_ring accepts.
inline constexpr std::uint64_t kMaxRingSize = 4096;

}  // namespace finring

#endif  // FINRING_RING_SPEC_HPP_
