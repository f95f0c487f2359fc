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

#include "finring/ring_spec.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "finring/error.hpp"

namespace finring {
namespace {

using Poly = std::vector<std::uint32_t>;

// Conway polynomials, little-endian.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
      {{2, 1}, {1, 1}},       {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 1}, {1, 1}},       {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},
      {{5, 1}, {3, 1}},       {{5, 2}, {2, 4, 1}},    {{5, 3}, {3, 3, 0, 1}},
      {{7, 1}, {4, 1}},       {{7, 2}, {3, 6, 1}},    {{7, 3}, {4, 0, 6, 1}},
  };
  return table;
}

// Remainder of `num` modulo the monic `den`, coefficients mod p.
Poly poly_mod(Poly num, const Poly& den, std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const std::uint64_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i) {
        const std::uint64_t sub = (lead * den[i]) % p;
        num[shift + i] = static_cast<std::uint32_t>((num[shift + i] + p - sub) % p);
      }
    }
    num.pop_back();
  }
  return num;
}

bool all_zero(const Poly& poly) {
  for (auto c : poly) {
    if (c != 0) return false;
  }
  return true;
}

void validate_gf(const GfSpec& g) {
  if (!is_prime(g.p)) {
    throw ArgumentError("gf characteristic " + std::to_string(g.p) + " is not prime");
  }
  if (g.k < 1) throw ArgumentError("gf degree must be at least 1");
  if (g.modulus.size() != g.k + 1) {
    throw ArgumentError("gf modulus must have " + std::to_string(g.k + 1) +
                        " coefficients");
  }
  for (auto c : g.modulus) {
    if (c >= g.p) throw ArgumentError("gf modulus coefficient out of range");
  }
  if (g.modulus.back() != 1) throw ArgumentError("gf modulus must be monic");
  if (!is_irreducible(g.p, g.modulus)) {
    throw ConstructionError("gf modulus is reducible over Z/" + std::to_string(g.p));
  }
}

std::string modulus_string(const Poly& poly) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out << ',';
    out << poly[i];
  }
  out << ']';
  return out.str();
}

std::uint64_t ipow_checked(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > kMaxRingSize * 64 / base + 1) {
      throw ScaleError("ring size exceeds the supported table limit of " +
                       std::to_string(kMaxRingSize));
    }
    result *= base;
  }
  return result;
}

std::string gf_canonical(const GfSpec& g) {
  return "gf(" + std::to_string(g.p) + "," + std::to_string(g.k) + "," +
         modulus_string(g.modulus) + ")";
}

std::string gf_display(const GfSpec& g) {
  if (g.modulus == default_modulus(g.p, g.k)) {
    return "gf(" + std::to_string(ipow_checked(g.p, g.k)) + ")";
  }
  return gf_canonical(g);
}

std::string field_name(const GfSpec& g) {
  return "F" + std::to_string(ipow_checked(g.p, g.k));
}

std::vector<std::string> shape_factors(const RingSpec& spec) {
  struct Visitor {
    std::vector<std::string> operator()(const ZModSpec& z) const {
      std::vector<std::string> out;
      std::uint32_t n = z.n;
      for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
          out.push_back("F" + std::to_string(p));
          while (n % p == 0) n /= p;
        }
      }
      if (n > 1) out.push_back("F" + std::to_string(n));
      return out;
    }
    std::vector<std::string> operator()(const GfSpec& g) const { return {field_name(g)}; }
    std::vector<std::string> operator()(const MatSpec& m) const {
      if (m.n == 1) return {field_name(m.base)};
      return {"M" + std::to_string(m.n) + "(" + field_name(m.base) + ")"};
    }
    std::vector<std::string> operator()(const ProdSpec& p) const {
      std::vector<std::string> out;
      for (const auto& f : p.factors) {
        auto part = shape_factors(f);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    std::vector<std::string> operator()(const TruncSpec& t) const {
      return {field_name(t.base)};
    }
  };
  return std::visit(Visitor{}, spec.ctor);
}

}  // namespace

GfSpec gf_spec(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) {
    throw ArgumentError("gf characteristic " + std::to_string(p) + " is not prime");
  }
  if (k < 1) throw ArgumentError("gf degree must be at least 1");
  return GfSpec{p, k, default_modulus(p, k)};
}

RingSpec zmod(std::uint32_t n) { return RingSpec{ZModSpec{n}}; }
RingSpec gf(std::uint32_t p, std::uint32_t k) { return RingSpec{gf_spec(p, k)}; }

RingSpec gf_q(std::uint32_t q) {
  auto pk = prime_power(q);
  if (!pk) throw ArgumentError(std::to_string(q) + " is not a prime power");
  return gf(pk->first, pk->second);
}

RingSpec mat(std::uint32_t n, const GfSpec& base) { return RingSpec{MatSpec{n, base}}; }
RingSpec prod(std::vector<RingSpec> factors) {
  return RingSpec{ProdSpec{std::move(factors)}};
}
RingSpec trunc(const GfSpec& base, std::uint32_t k) { return RingSpec{TruncSpec{base, k}}; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  if (monic.size() < 2) return false;
  const std::size_t degree = monic.size() - 1;
  if (degree == 1) return true;
  // Every monic g with 1 <= deg g <= degree/2, enumerated by coefficients.
  for (std::size_t dg = 1; dg <= degree / 2; ++dg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(dg + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < dg; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[dg] = 1;
      if (all_zero(poly_mod(monic, g, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
  const auto& table = conway_table();
  if (auto it = table.find({p, k}); it != table.end()) return it->second;
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (is_irreducible(p, f)) return f;
  }
  throw ConstructionError("no irreducible polynomial found");  // unreachable
}

void validate(const RingSpec& spec) {
  struct Visitor {
    void operator()(const ZModSpec& z) const {
      if (z.n < 2) throw ArgumentError("zmod requires n >= 2");
    }
    void operator()(const GfSpec& g) const { validate_gf(g); }
    void operator()(const MatSpec& m) const {
      if (m.n < 1) throw ArgumentError("mat requires n >= 1");
      validate_gf(m.base);
    }
    void operator()(const ProdSpec& p) const {
      if (p.factors.empty()) throw ArgumentError("prod requires at least one factor");
      for (const auto& f : p.factors) validate(f);
    }
    void operator()(const TruncSpec& t) const {
      if (t.k < 2) throw ArgumentError("trunc requires k >= 2");
      validate_gf(t.base);
    }
  };
  std::visit(Visitor{}, spec.ctor);
  (void)ring_size(spec);
}

std::uint64_t ring_size(const RingSpec& spec) {
  struct Visitor {
    std::uint64_t operator()(const ZModSpec& z) const { return ipow_checked(z.n, 1); }
    std::uint64_t operator()(const GfSpec& g) const { return ipow_checked(g.p, g.k); }
    std::uint64_t operator()(const MatSpec& m) const {
      return ipow_checked(ipow_checked(m.base.p, m.base.k), std::uint64_t{m.n} * m.n);
    }
    std::uint64_t operator()(const ProdSpec& p) const {
      std::uint64_t total = 1;
      for (const auto& f : p.factors) {
        const std::uint64_t s = ring_size(f);
        if (total * s > kMaxRingSize * 64) {
          throw ScaleError("ring size exceeds the supported table limit of " +
                           std::to_string(kMaxRingSize));
        }
        total *= s;
      }
      return total;
    }
    std::uint64_t operator()(const TruncSpec& t) const {
      return ipow_checked(ipow_checked(t.base.p, t.base.k), t.k);
    }
  };
  const std::uint64_t size = std::visit(Visitor{}, spec.ctor);
  if (size > kMaxRingSize) {
    throw ScaleError("ring size " + std::to_string(size) +
                     " exceeds the supported table limit of " +
                     std::to_string(kMaxRingSize));
  }
  return size;
}

std::string canonical_string(const RingSpec& spec) {
  struct Visitor {
    std::string operator()(const ZModSpec& z) const {
      return "zmod(" + std::to_string(z.n) + ")";
    }
    std::string operator()(const GfSpec& g) const { return gf_canonical(g); }
    std::string operator()(const MatSpec& m) const {
      return "mat(" + std::to_string(m.n) + "," + gf_canonical(m.base) + ")";
    }
    std::string operator()(const ProdSpec& p) const {
      std::string out = "prod(";
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += ',';
        out += canonical_string(p.factors[i]);
      }
      return out + ")";
    }
    std::string operator()(const TruncSpec& t) const {
      return "trunc(" + gf_canonical(t.base) + "," + std::to_string(t.k) + ")";
    }
  };
  return std::visit(Visitor{}, spec.ctor);
}

std::string display_string(const RingSpec& spec) {
  struct Visitor {
    std::string operator()(const ZModSpec& z) const {
      return "zmod(" + std::to_string(z.n) + ")";
    }
    std::string operator()(const GfSpec& g) const { return gf_display(g); }
    std::string operator()(const MatSpec& m) const {
      return "mat(" + std::to_string(m.n) + "," + gf_display(m.base) + ")";
    }
    std::string operator()(const ProdSpec& p) const {
      std::string out = "prod(";
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += ',';
        out += display_string(p.factors[i]);
      }
      return out + ")";
    }
    std::string operator()(const TruncSpec& t) const {
      return "trunc(" + gf_display(t.base) + "," + std::to_string(t.k) + ")";
    }
  };
  return std::visit(Visitor{}, spec.ctor);
}

std::string quotient_shape(const RingSpec& spec) {
  const auto factors = shape_factors(spec);
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += factors[i];
  }
  return out;
}

bool quotient_is_field(const RingSpec& spec) {
  const auto factors = shape_factors(spec);
  return factors.size() == 1 && factors[0].front() == 'F';
}

bool is_field(const RingSpec& spec) {
  if (const auto* z = std::get_if<ZModSpec>(&spec.ctor)) return is_prime(z->n);
  if (std::holds_alternative<GfSpec>(spec.ctor)) return true;
  if (const auto* m = std::get_if<MatSpec>(&spec.ctor)) return m->n == 1;
  if (const auto* p = std::get_if<ProdSpec>(&spec.ctor)) {
    return p->factors.size() == 1 && is_field(p->factors[0]);
  }
  return false;
}

}  // namespace finring
