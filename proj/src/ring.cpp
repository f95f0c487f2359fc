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

#include "finring/ring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "finring/error.hpp"

namespace finring {
namespace {

// Little-endian digits of `value` in base `radix`.
std::vector<Elem> digits(std::size_t value, std::size_t radix, std::size_t count) {
  std::vector<Elem> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = static_cast<Elem>(value % radix);
    value /= radix;
  }
  return out;
}

std::size_t undigits(std::span<const Elem> ds, std::size_t radix) {
  std::size_t value = 0;
  for (std::size_t i = ds.size(); i-- > 0;) value = value * radix + ds[i];
  return value;
}

bool needs_parens(const std::string& label) {
  return label.find_first_of("+") != std::string::npos;
}

RingTables blank_tables(std::size_t m) {
  RingTables t;
  t.size = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  t.labels.resize(m);
  return t;
}

RingPtr build_zmod(const RingSpec& spec, const ZModSpec& z) {
  const std::size_t n = z.n;
  RingTables t = blank_tables(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
      t.mul[a * n + b] = static_cast<std::uint16_t>((a * b) % n);
    }
  }
  t.one = 1 % n;
  RingTable::Structure s;
  s.kind = RingKind::zmod;
  s.spec = spec;
  s.additive_radices = {z.n};
  s.description = display_string(spec);
  return std::make_shared<const RingTable>(std::move(t), std::move(s));
}

std::string poly_label(const std::vector<Elem>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Elem c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += 'a';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

RingPtr build_gf(const RingSpec& spec, const GfSpec& g) {
  const std::size_t p = g.p;
  const std::size_t k = g.k;
  std::size_t m = 1;
  for (std::size_t i = 0; i < k; ++i) m *= p;
  std::vector<std::vector<Elem>> coeffs(m);
  for (std::size_t a = 0; a < m; ++a) coeffs[a] = digits(a, p, k);

  RingTables t = blank_tables(m);
  std::vector<std::uint64_t> product(2 * k);
  for (std::size_t a = 0; a < m; ++a) {
    t.labels[a] = k == 1 ? std::to_string(a) : poly_label(coeffs[a]);
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Elem> sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = (coeffs[a][i] + coeffs[b][i]) % p;
      t.add[a * m + b] = static_cast<std::uint16_t>(undigits(sum, p));

      std::fill(product.begin(), product.end(), 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          product[i + j] = (product[i + j] + std::uint64_t{coeffs[a][i]} * coeffs[b][j]) % p;
        }
      }
      // Reduce by the monic modulus from the top degree down.
      for (std::size_t deg = 2 * k - 1; deg >= k; --deg) {
        const std::uint64_t lead = product[deg];
        if (lead != 0) {
          for (std::size_t i = 0; i <= k; ++i) {
            const std::size_t pos = deg - k + i;
            product[pos] = (product[pos] + p * p - (lead * g.modulus[i]) % p) % p;
          }
        }
        if (deg == k) break;
      }
      std::vector<Elem> reduced(k);
      for (std::size_t i = 0; i < k; ++i) reduced[i] = static_cast<Elem>(product[i]);
      t.mul[a * m + b] = static_cast<std::uint16_t>(undigits(reduced, p));
    }
  }
  t.one = 1;
  RingTable::Structure s;
  s.kind = RingKind::gf;
  s.spec = spec;
  s.additive_radices.assign(k, g.p);
  s.description = display_string(spec);
  return std::make_shared<const RingTable>(std::move(t), std::move(s));
}

RingPtr build_mat(const RingSpec& spec, const MatSpec& ms) {
  RingPtr field = build_ring(RingSpec{ms.base});
  const std::size_t q = field->size();
  const std::size_t n = ms.n;
  const std::size_t cells = n * n;
  std::size_t m = 1;
  for (std::size_t i = 0; i < cells; ++i) m *= q;

  std::vector<std::vector<Elem>> entries(m);
  for (std::size_t a = 0; a < m; ++a) entries[a] = digits(a, q, cells);

  RingTables t = blank_tables(m);
  std::vector<Elem> sum(cells), product(cells);
  for (std::size_t a = 0; a < m; ++a) {
    std::string label = "[";
    for (std::size_t r = 0; r < n; ++r) {
      if (r) label += ',';
      label += '[';
      for (std::size_t c = 0; c < n; ++c) {
        if (c) label += ',';
        label += field->label(entries[a][r * n + c]);
      }
      label += ']';
    }
    t.labels[a] = label + "]";
    const auto& A = entries[a];
    for (std::size_t b = 0; b < m; ++b) {
      const auto& B = entries[b];
      for (std::size_t i = 0; i < cells; ++i) sum[i] = field->add(A[i], B[i]);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          Elem acc = 0;
          for (std::size_t j = 0; j < n; ++j) {
            acc = field->add(acc, field->mul(A[r * n + j], B[j * n + c]));
          }
          product[r * n + c] = acc;
        }
      }
      t.add[a * m + b] = static_cast<std::uint16_t>(undigits(sum, q));
      t.mul[a * m + b] = static_cast<std::uint16_t>(undigits(product, q));
    }
  }
  std::vector<Elem> identity(cells, 0);
  for (std::size_t i = 0; i < n; ++i) identity[i * n + i] = field->one();
  t.one = static_cast<Elem>(undigits(identity, q));

  RingTable::Structure s;
  s.kind = RingKind::mat;
  s.spec = spec;
  for (std::size_t i = 0; i < cells; ++i) {
    s.additive_radices.insert(s.additive_radices.end(), field->additive_radices().begin(),
                              field->additive_radices().end());
  }
  s.components = {field};
  s.matrix_dim = ms.n;
  s.description = display_string(spec);
  return std::make_shared<const RingTable>(std::move(t), std::move(s));
}

RingPtr build_prod(const RingSpec& spec, const ProdSpec& ps) {
  std::vector<RingPtr> factors;
  for (const auto& f : ps.factors) factors.push_back(build_ring(f));
  std::size_t m = 1;
  for (const auto& f : factors) m *= f->size();

  RingTables t = blank_tables(m);
  const std::size_t count = factors.size();
  std::vector<std::vector<Elem>> parts(m, std::vector<Elem>(count));
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t rest = a;
    for (std::size_t i = 0; i < count; ++i) {
      parts[a][i] = static_cast<Elem>(rest % factors[i]->size());
      rest /= factors[i]->size();
    }
  }
  auto encode = [&](const std::vector<Elem>& ps_) {
    std::size_t value = 0;
    for (std::size_t i = count; i-- > 0;) value = value * factors[i]->size() + ps_[i];
    return value;
  };
  std::vector<Elem> sum(count), product(count);
  for (std::size_t a = 0; a < m; ++a) {
    std::string label = "(";
    for (std::size_t i = 0; i < count; ++i) {
      if (i) label += ',';
      label += factors[i]->label(parts[a][i]);
    }
    t.labels[a] = label + ")";
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < count; ++i) {
        sum[i] = factors[i]->add(parts[a][i], parts[b][i]);
        product[i] = factors[i]->mul(parts[a][i], parts[b][i]);
      }
      t.add[a * m + b] = static_cast<std::uint16_t>(encode(sum));
      t.mul[a * m + b] = static_cast<std::uint16_t>(encode(product));
    }
  }
  std::vector<Elem> ones(count);
  for (std::size_t i = 0; i < count; ++i) ones[i] = factors[i]->one();
  t.one = static_cast<Elem>(encode(ones));

  RingTable::Structure s;
  s.kind = RingKind::prod;
  s.spec = spec;
  for (const auto& f : factors) {
    s.additive_radices.insert(s.additive_radices.end(), f->additive_radices().begin(),
                              f->additive_radices().end());
  }
  s.components = std::move(factors);
  s.description = display_string(spec);
  return std::make_shared<const RingTable>(std::move(t), std::move(s));
}

RingPtr build_trunc(const RingSpec& spec, const TruncSpec& ts) {
  RingPtr field = build_ring(RingSpec{ts.base});
  const std::size_t q = field->size();
  const std::size_t k = ts.k;
  std::size_t m = 1;
  for (std::size_t i = 0; i < k; ++i) m *= q;

  std::vector<std::vector<Elem>> coeffs(m);
  for (std::size_t a = 0; a < m; ++a) coeffs[a] = digits(a, q, k);

  RingTables t = blank_tables(m);
  std::vector<Elem> sum(k), product(k);
  for (std::size_t a = 0; a < m; ++a) {
    std::string label;
    for (std::size_t i = 0; i < k; ++i) {
      const Elem c = coeffs[a][i];
      if (c == 0) continue;
      if (!label.empty()) label += '+';
      const std::string& cl = field->label(c);
      if (i == 0) {
        label += cl;
        continue;
      }
      if (c != field->one()) label += needs_parens(cl) ? "(" + cl + ")" : cl;
      label += 'e';
      if (i > 1) label += '^' + std::to_string(i);
    }
    t.labels[a] = label.empty() ? "0" : label;
    for (std::size_t b = 0; b < m; ++b) {
      std::fill(product.begin(), product.end(), 0);
      for (std::size_t i = 0; i < k; ++i) {
        sum[i] = field->add(coeffs[a][i], coeffs[b][i]);
        for (std::size_t j = 0; i + j < k; ++j) {
          product[i + j] = field->add(product[i + j], field->mul(coeffs[a][i], coeffs[b][j]));
        }
      }
      t.add[a * m + b] = static_cast<std::uint16_t>(undigits(sum, q));
      t.mul[a * m + b] = static_cast<std::uint16_t>(undigits(product, q));
    }
  }
  t.one = field->one();

  RingTable::Structure s;
  s.kind = RingKind::trunc;
  s.spec = spec;
  for (std::size_t i = 0; i < k; ++i) {
    s.additive_radices.insert(s.additive_radices.end(), field->additive_radices().begin(),
                              field->additive_radices().end());
  }
  s.components = {field};
  s.trunc_length = ts.k;
  s.description = display_string(spec);
  return std::make_shared<const RingTable>(std::move(t), std::move(s));
}

std::string ideal_tag(const RingTable& ring, std::size_t ideal_size) {
  return ring.description() + "/I" + std::to_string(ideal_size);
}

}  // namespace

RingTable::RingTable(RingTables tables, Structure structure)
    : size_(tables.size),
      add_(std::move(tables.add)),
      mul_(std::move(tables.mul)),
      labels_(std::move(tables.labels)),
      one_(tables.one),
      structure_(std::move(structure)) {
  if (size_ < 2) throw ConstructionError("ring must have at least two elements");
  if (size_ > kMaxRingSize) throw ScaleError("ring exceeds the supported table limit");
  if (add_.size() != size_ * size_ || mul_.size() != size_ * size_ ||
      labels_.size() != size_ || one_ >= size_) {
    throw ConstructionError("inconsistent ring tables");
  }
  derive();
  check_axioms();
}

void RingTable::derive() {
  const std::size_t m = size_;
  neg_.assign(m, 0);
  for (Elem a = 0; a < m; ++a) {
    bool found = false;
    for (Elem b = 0; b < m; ++b) {
      if (add(a, b) == 0) {
        neg_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw ConstructionError("additive inverse missing");
  }

  inv_.assign(m, kNoInverse);
  units_.clear();
  for (Elem a = 0; a < m; ++a) {
    if (inv_[a] != kNoInverse) {
      units_.push_back(a);
      continue;
    }
    for (Elem b = 0; b < m; ++b) {
      if (mul(a, b) == one_ && mul(b, a) == one_) {
        inv_[a] = b;
        inv_[b] = a;
        units_.push_back(a);
        break;
      }
    }
  }

  exponent_ = 1;
  for (Elem a = 0; a < m; ++a) exponent_ = std::lcm(exponent_, additive_order(a));

  commutative_ = true;
  for (Elem a = 0; a < m && commutative_; ++a) {
    for (Elem b = a + 1; b < m; ++b) {
      if (mul(a, b) != mul(b, a)) {
        commutative_ = false;
        break;
      }
    }
  }
}

void RingTable::check_axioms() const {
  const std::size_t m = size_;
  auto fail = [this](const std::string& what) {
    throw ConstructionError("ring axiom violated (" + what + ") in " + description());
  };
  for (Elem a = 0; a < m; ++a) {
    if (add(a, 0) != a || add(0, a) != a) fail("additive identity");
    if (mul(a, one_) != a || mul(one_, a) != a) fail("multiplicative identity");
    for (Elem b = 0; b < m; ++b) {
      if (add(a, b) != add(b, a)) fail("additive commutativity");
    }
  }
  auto triple = [&](Elem a, Elem b, Elem c) {
    if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("left distributivity");
    if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) fail("right distributivity");
  };
  if (m <= 64) {
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        for (Elem c = 0; c < m; ++c) triple(a, b, c);
      }
    }
  } else {
    std::mt19937_64 rng(0x5eedu + m);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(m - 1));
    for (int i = 0; i < 100000; ++i) triple(pick(rng), pick(rng), pick(rng));
  }
}

std::optional<Elem> RingTable::inverse(Elem a) const {
  if (inv_[a] == kNoInverse) return std::nullopt;
  return inv_[a];
}

std::uint32_t RingTable::additive_order(Elem a) const {
  std::uint32_t order = 1;
  for (Elem x = a; x != 0; x = add(x, a)) ++order;
  return order;
}

std::optional<Elem> RingTable::find(std::string_view label) const {
  if (!label.empty() && label.front() == '#') {
    std::size_t value = 0;
    for (char c : label.substr(1)) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(c - '0');
      if (value >= size_) return std::nullopt;
    }
    if (label.size() == 1) return std::nullopt;
    return static_cast<Elem>(value);
  }
  for (Elem a = 0; a < size_; ++a) {
    if (labels_[a] == label) return a;
  }
  return std::nullopt;
}

std::vector<Elem> RingTable::matrix_entries(Elem a) const {
  if (kind() != RingKind::mat) throw ArgumentError("not a matrix ring");
  const std::size_t cells = std::size_t{matrix_dim()} * matrix_dim();
  return digits(a, components().front()->size(), cells);
}

Elem RingTable::from_matrix_entries(std::span<const Elem> entries) const {
  if (kind() != RingKind::mat) throw ArgumentError("not a matrix ring");
  if (entries.size() != std::size_t{matrix_dim()} * matrix_dim()) {
    throw ArgumentError("matrix entry count mismatch");
  }
  return static_cast<Elem>(undigits(entries, components().front()->size()));
}

std::vector<Elem> RingTable::product_parts(Elem a) const {
  if (kind() != RingKind::prod) throw ArgumentError("not a product ring");
  std::vector<Elem> parts;
  std::size_t rest = a;
  for (const auto& f : components()) {
    parts.push_back(static_cast<Elem>(rest % f->size()));
    rest /= f->size();
  }
  return parts;
}

Elem RingTable::from_product_parts(std::span<const Elem> parts) const {
  if (kind() != RingKind::prod) throw ArgumentError("not a product ring");
  if (parts.size() != components().size()) throw ArgumentError("product part count mismatch");
  std::size_t value = 0;
  for (std::size_t i = parts.size(); i-- > 0;) value = value * components()[i]->size() + parts[i];
  return static_cast<Elem>(value);
}

RingPtr build_ring(const RingSpec& spec) {
  validate(spec);
  struct Visitor {
    const RingSpec& spec;
    RingPtr operator()(const ZModSpec& z) const { return build_zmod(spec, z); }
    RingPtr operator()(const GfSpec& g) const { return build_gf(spec, g); }
    RingPtr operator()(const MatSpec& m) const { return build_mat(spec, m); }
    RingPtr operator()(const ProdSpec& p) const { return build_prod(spec, p); }
    RingPtr operator()(const TruncSpec& t) const { return build_trunc(spec, t); }
  };
  RingPtr ring = std::visit(Visitor{spec}, spec.ctor);
  if (ring->size() != ring_size(spec)) {
    throw ConstructionError("materialized size disagrees with the ring spec");
  }
  return ring;
}

bool Ideal::contains(Elem a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

bool is_ideal(const RingTable& ring, std::span<const Elem> members, Side side) {
  std::vector<char> in(ring.size(), 0);
  for (Elem a : members) {
    if (a >= ring.size()) return false;
    in[a] = 1;
  }
  if (!in[0]) return false;
  for (Elem a : members) {
    for (Elem b : members) {
      if (!in[ring.add(a, b)]) return false;
    }
  }
  for (Elem r = 0; r < ring.size(); ++r) {
    for (Elem s : members) {
      if (side != Side::right && !in[ring.mul(r, s)]) return false;
      if (side != Side::left && !in[ring.mul(s, r)]) return false;
    }
  }
  return true;
}

Ideal jacobson_radical(const RingPtr& ring) {
  const RingTable& R = *ring;
  Ideal J{ring, {}, Side::two_sided};
  for (Elem s = 0; s < R.size(); ++s) {
    bool member = true;
    for (Elem r = 0; r < R.size() && member; ++r) {
      member = R.is_unit(R.add(R.one(), R.mul(r, s)));
    }
    if (member) J.members.push_back(s);
  }
  for (Elem s : J.members) {
    for (Elem r = 0; r < R.size(); ++r) {
      if (!R.is_unit(R.add(R.one(), R.mul(s, r)))) {
        throw std::logic_error("radical element fails the right-hand unit test");
      }
    }
  }
  if (!is_ideal(R, J.members, Side::two_sided)) {
    throw std::logic_error("computed radical is not a two-sided ideal");
  }
  return J;
}

QuotientMap quotient_ring(const Ideal& ideal) {
  if (!ideal.ring) throw ArgumentError("ideal has no ring");
  const RingTable& R = *ideal.ring;
  if (ideal.side != Side::two_sided || !is_ideal(R, ideal.members, Side::two_sided)) {
    throw ArgumentError("quotient requires a two-sided ideal");
  }
  if (ideal.size() >= R.size()) throw ArgumentError("quotient by the whole ring");

  constexpr Elem kUnset = 0xFFFFFFFFu;
  QuotientMap q;
  q.source = ideal.ring;
  q.projection.assign(R.size(), kUnset);
  for (Elem x = 0; x < R.size(); ++x) {
    if (q.projection[x] != kUnset) continue;
    const Elem coset = static_cast<Elem>(q.representatives.size());
    q.representatives.push_back(x);
    for (Elem j : ideal.members) q.projection[R.add(x, j)] = coset;
  }

  const std::size_t k = q.representatives.size();
  RingTables t = blank_tables(k);
  for (std::size_t a = 0; a < k; ++a) {
    const Elem ra = q.representatives[a];
    t.labels[a] = "[" + R.label(ra) + "]";
    for (std::size_t b = 0; b < k; ++b) {
      const Elem rb = q.representatives[b];
      t.add[a * k + b] = static_cast<std::uint16_t>(q.projection[R.add(ra, rb)]);
      t.mul[a * k + b] = static_cast<std::uint16_t>(q.projection[R.mul(ra, rb)]);
    }
  }
  t.one = q.projection[R.one()];

  RingTable::Structure s;
  s.kind = RingKind::quotient;
  s.description = ideal_tag(R, ideal.size());
  q.target = std::make_shared<const RingTable>(std::move(t), std::move(s));

  const RingTable& Q = *q.target;
  auto check_pair = [&](Elem x, Elem y) {
    if (q.projection[R.add(x, y)] != Q.add(q.projection[x], q.projection[y]) ||
        q.projection[R.mul(x, y)] != Q.mul(q.projection[x], q.projection[y])) {
      throw ConstructionError("projection is not a ring homomorphism");
    }
  };
  if (R.size() <= 256) {
    for (Elem x = 0; x < R.size(); ++x) {
      for (Elem y = 0; y < R.size(); ++y) check_pair(x, y);
    }
  } else {
    std::mt19937_64 rng(0x9e3779b9u);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(R.size() - 1));
    for (int i = 0; i < 100000; ++i) check_pair(pick(rng), pick(rng));
  }
  return q;
}

std::optional<std::vector<Elem>> opposite_iso(const RingTable& ring) {
  std::vector<Elem> phi(ring.size());
  if (ring.commutative()) {
    std::iota(phi.begin(), phi.end(), Elem{0});
  } else if (ring.kind() == RingKind::mat) {
    const std::size_t n = ring.matrix_dim();
    for (Elem a = 0; a < ring.size(); ++a) {
      auto e = ring.matrix_entries(a);
      std::vector<Elem> tr(e.size());
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) tr[c * n + r] = e[r * n + c];
      }
      phi[a] = ring.from_matrix_entries(tr);
    }
  } else if (ring.kind() == RingKind::prod) {
    std::vector<std::vector<Elem>> parts;
    for (const auto& f : ring.components()) {
      auto sub = opposite_iso(*f);
      if (!sub) return std::nullopt;
      parts.push_back(std::move(*sub));
    }
    for (Elem a = 0; a < ring.size(); ++a) {
      auto pa = ring.product_parts(a);
      for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = parts[i][pa[i]];
      phi[a] = ring.from_product_parts(pa);
    }
  } else {
    return std::nullopt;
  }

  auto check_pair = [&](Elem x, Elem y) {
    if (phi[ring.mul(x, y)] != ring.mul(phi[y], phi[x]) ||
        phi[ring.add(x, y)] != ring.add(phi[x], phi[y])) {
      throw std::logic_error("opposite map is not an anti-automorphism");
    }
  };
  std::vector<char> seen(ring.size(), 0);
  for (Elem a = 0; a < ring.size(); ++a) {
    if (seen[phi[a]]) throw std::logic_error("opposite map is not a bijection");
    seen[phi[a]] = 1;
  }
  if (ring.size() <= 256) {
    for (Elem x = 0; x < ring.size(); ++x) {
      for (Elem y = 0; y < ring.size(); ++y) check_pair(x, y);
    }
  } else {
    std::mt19937_64 rng(0x0ddba11u);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(ring.size() - 1));
    for (int i = 0; i < 100000; ++i) check_pair(pick(rng), pick(rng));
  }
  return phi;
}

std::vector<Ideal> principal_left_ideals(const RingPtr& ring) {
  const RingTable& R = *ring;
  std::set<std::vector<Elem>> distinct;
  std::vector<char> in(R.size());
  for (Elem x = 0; x < R.size(); ++x) {
    std::fill(in.begin(), in.end(), 0);
    for (Elem r = 0; r < R.size(); ++r) in[R.mul(r, x)] = 1;
    std::vector<Elem> members;
    for (Elem a = 0; a < R.size(); ++a) {
      if (in[a]) members.push_back(a);
    }
    distinct.insert(std::move(members));
  }
  std::vector<Ideal> out;
  for (const auto& members : distinct) {
    if (!is_ideal(R, members, Side::left)) {
      throw std::logic_error("principal left ideal failed closure");
    }
    out.push_back(Ideal{ring, members, Side::left});
  }
  std::stable_sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace finring
