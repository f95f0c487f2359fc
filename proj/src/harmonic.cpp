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

#include "finring/harmonic.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "finring/error.hpp"
#include "finring/parallel.hpp"

namespace finring {
namespace {

constexpr std::size_t kMaxGridPoints = 10'000'000;

std::vector<std::uint16_t> table_from(const RingTable& ring, auto&& numerator) {
  const std::size_t m = ring.size();
  std::vector<std::uint16_t> table(m * m);
  for (Elem a = 0; a < m; ++a) {
    for (Elem x = 0; x < m; ++x) table[a * m + x] = static_cast<std::uint16_t>(numerator(a, x));
  }
  return table;
}

Pairing gf_pairing(const RingPtr& ring, const GfSpec& g) {
  const RingTable& F = *ring;
  const std::size_t m = F.size();
  std::vector<Elem> trace(m);
  for (Elem a = 0; a < m; ++a) {
    if (g.k == 1) {
      trace[a] = a;
      continue;
    }
    // Tr(a) = a + a^p + ... + a^{p^{k-1}}.
    Elem acc = 0;
    Elem power = a;
    for (std::uint32_t j = 0; j < g.k; ++j) {
      acc = F.add(acc, power);
      Elem next = F.one();
      for (std::uint32_t i = 0; i < g.p; ++i) next = F.mul(next, power);
      power = next;
    }
    if (acc >= g.p) throw std::logic_error("field trace left the prime subfield");
    trace[a] = acc;
  }
  return Pairing(ring, g.p, table_from(F, [&](Elem a, Elem x) { return trace[F.mul(a, x)]; }));
}

Pairing zmod_pairing(const RingPtr& ring) {
  const RingTable& R = *ring;
  return Pairing(ring, static_cast<std::uint32_t>(R.size()),
                 table_from(R, [&](Elem a, Elem x) { return R.mul(a, x); }));
}

Pairing mat_pairing(const RingPtr& ring) {
  const RingTable& R = *ring;
  const Pairing field = build_pairing(R.components().front());
  const RingTable& F = *field.ring();
  const std::size_t n = R.matrix_dim();
  std::vector<Elem> trace(R.size());
  for (Elem a = 0; a < R.size(); ++a) {
    const auto e = R.matrix_entries(a);
    Elem acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc = F.add(acc, e[i * n + i]);
    trace[a] = acc;
  }
  return Pairing(ring, field.denominator(), table_from(R, [&](Elem a, Elem x) {
                   return field.numerator(F.one(), trace[R.mul(a, x)]);
                 }));
}

Pairing trunc_pairing(const RingPtr& ring) {
  const RingTable& R = *ring;
  const Pairing field = build_pairing(R.components().front());
  const std::size_t q = field.ring()->size();
  const std::size_t k = R.trunc_length();
  const std::uint32_t D = field.denominator();
  return Pairing(ring, D, table_from(R, [&](Elem a, Elem x) {
                   std::uint32_t acc = 0;
                   std::size_t ra = a, rx = x;
                   for (std::size_t i = 0; i < k; ++i) {
                     acc = (acc + field.numerator(static_cast<Elem>(ra % q),
                                                  static_cast<Elem>(rx % q))) % D;
                     ra /= q;
                     rx /= q;
                   }
                   return acc;
                 }));
}

Pairing prod_pairing(const RingPtr& ring) {
  const RingTable& R = *ring;
  std::vector<Pairing> factors;
  std::uint32_t D = 1;
  for (const auto& f : R.components()) {
    factors.push_back(build_pairing(f));
    D = std::lcm(D, factors.back().denominator());
  }
  std::vector<std::vector<Elem>> parts(R.size());
  for (Elem a = 0; a < R.size(); ++a) parts[a] = R.product_parts(a);
  return Pairing(ring, D, table_from(R, [&](Elem a, Elem x) {
                   std::uint64_t acc = 0;
                   for (std::size_t i = 0; i < factors.size(); ++i) {
                     const std::uint32_t scale = D / factors[i].denominator();
                     acc += std::uint64_t{factors[i].numerator(parts[a][i], parts[x][i])} * scale;
                   }
                   return static_cast<std::uint32_t>(acc % D);
                 }));
}

Pairing basis_pairing(const RingPtr& ring) {
  const RingTable& R = *ring;
  const AdditiveBasis basis = additive_basis(R);
  std::uint32_t D = 1;
  for (auto o : basis.orders) D = std::lcm(D, o);
  return Pairing(ring, D, table_from(R, [&](Elem a, Elem x) {
                   std::uint64_t acc = 0;
                   for (std::size_t i = 0; i < basis.orders.size(); ++i) {
                     acc += std::uint64_t{basis.coords[a][i]} * basis.coords[x][i] *
                            (D / basis.orders[i]);
                   }
                   return static_cast<std::uint32_t>(acc % D);
                 }));
}

void check_pairing(const Pairing& pairing) {
  const RingTable& R = *pairing.ring();
  const std::size_t m = R.size();
  const std::uint32_t D = pairing.denominator();
  for (Elem a = 1; a < m; ++a) {
    bool nondegenerate = false;
    for (Elem x = 0; x < m && !nondegenerate; ++x) nondegenerate = pairing.numerator(a, x) != 0;
    if (!nondegenerate) throw ConstructionError("pairing is degenerate on " + R.description());
  }
  auto additive = [&](Elem a, Elem b, Elem x) {
    if (pairing.numerator(R.add(a, b), x) !=
            (pairing.numerator(a, x) + pairing.numerator(b, x)) % D ||
        pairing.numerator(x, R.add(a, b)) !=
            (pairing.numerator(x, a) + pairing.numerator(x, b)) % D) {
      throw ConstructionError("pairing is not biadditive on " + R.description());
    }
  };
  if (m <= 64) {
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        for (Elem x = 0; x < m; ++x) additive(a, b, x);
      }
    }
  } else {
    std::mt19937_64 rng(0xbe7au + m);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(m - 1));
    for (int i = 0; i < 100000; ++i) additive(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

std::size_t grid_size(std::size_t m, std::size_t d) {
  std::size_t points = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (points > kMaxGridPoints / m) {
      throw ScaleError("m^d exceeds the supported grid limit of 10^7 points");
    }
    points *= m;
  }
  return points;
}

PointCodec::PointCodec(std::size_t m, std::size_t d) : m_(m), d_(d), points_(grid_size(m, d)) {}

std::size_t PointCodec::encode(std::span<const Elem> coords) const {
  std::size_t index = 0;
  for (std::size_t i = d_; i-- > 0;) index = index * m_ + coords[i];
  return index;
}

void PointCodec::decode(std::size_t index, std::span<Elem> coords) const {
  for (std::size_t i = 0; i < d_; ++i) {
    coords[i] = static_cast<Elem>(index % m_);
    index /= m_;
  }
}

std::vector<Elem> PointCodec::decode(std::size_t index) const {
  std::vector<Elem> coords(d_);
  decode(index, coords);
  return coords;
}

AdditiveBasis additive_basis(const RingTable& ring) {
  const std::size_t m = ring.size();
  std::vector<std::uint32_t> order(m);
  for (Elem a = 0; a < m; ++a) order[a] = ring.additive_order(a);

  std::vector<std::uint32_t> primes;
  {
    std::size_t rest = m;
    for (std::uint32_t p = 2; p * p <= rest; ++p) {
      if (rest % p == 0) {
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
      }
    }
    if (rest > 1) primes.push_back(static_cast<std::uint32_t>(rest));
  }
  auto is_power_of = [](std::uint32_t value, std::uint32_t p) {
    while (value % p == 0) value /= p;
    return value == 1;
  };

  AdditiveBasis basis;
  for (std::uint32_t p : primes) {
    std::vector<Elem> primary;
    for (Elem a = 0; a < m; ++a) {
      if (is_power_of(order[a], p)) primary.push_back(a);
    }
    // Greedy: largest-order element meeting the current span trivially.
    std::vector<char> in_span(m, 0);
    std::vector<Elem> span = {0};
    in_span[0] = 1;
    while (span.size() < primary.size()) {
      Elem best = 0;
      std::uint32_t best_order = 0;
      for (Elem a : primary) {
        if (order[a] <= best_order) continue;
        bool independent = true;
        for (Elem x = a; x != 0 && independent; x = ring.add(x, a)) independent = !in_span[x];
        if (independent) {
          best = a;
          best_order = order[a];
        }
      }
      if (best_order == 0) throw ConstructionError("additive group decomposition failed");
      std::vector<Elem> grown;
      grown.reserve(span.size() * best_order);
      for (Elem h : span) {
        Elem x = h;
        for (std::uint32_t k = 0; k < best_order; ++k) {
          if (k) x = ring.add(x, best);
          grown.push_back(x);
        }
      }
      for (Elem x : grown) {
        if (in_span[x] && std::find(span.begin(), span.end(), x) == span.end()) {
          throw ConstructionError("additive group decomposition failed");
        }
        in_span[x] = 1;
      }
      span = std::move(grown);
      basis.generators.push_back(best);
      basis.orders.push_back(best_order);
    }
  }

  // Coordinates of every element by enumerating all combinations.
  basis.coords.assign(m, {});
  std::vector<std::uint32_t> c(basis.orders.size(), 0);
  std::size_t hit = 0;
  while (true) {
    Elem x = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::uint32_t k = 0; k < c[i]; ++k) x = ring.add(x, basis.generators[i]);
    }
    if (!basis.coords[x].empty()) throw ConstructionError("additive basis is not independent");
    basis.coords[x] = c;
    ++hit;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == basis.orders[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
  if (hit != m) throw ConstructionError("additive basis does not span");
  return basis;
}

Pairing::Pairing(RingPtr ring, std::uint32_t denominator, std::vector<std::uint16_t> table)
    : ring_(std::move(ring)), denominator_(denominator), table_(std::move(table)) {
  if (table_.size() != ring_->size() * ring_->size()) {
    throw ConstructionError("pairing table has the wrong size");
  }
}

Pairing build_pairing(const RingPtr& ring) {
  if (!ring) throw ArgumentError("null ring");
  auto make = [&]() -> Pairing {
    switch (ring->kind()) {
      case RingKind::zmod:
        return zmod_pairing(ring);
      case RingKind::gf:
        return gf_pairing(ring, std::get<GfSpec>(ring->spec()->ctor));
      case RingKind::mat:
        return mat_pairing(ring);
      case RingKind::prod:
        return prod_pairing(ring);
      case RingKind::trunc:
        return trunc_pairing(ring);
      case RingKind::quotient:
        return basis_pairing(ring);
    }
    throw ConstructionError("unsupported ring constructor");
  };
  Pairing pairing = make();
  check_pairing(pairing);
  return pairing;
}

bool Character::trivial() const {
  for (Elem a : dual) {
    if (a != 0) return false;
  }
  return true;
}

Character trivial_character(std::size_t d) { return Character{std::vector<Elem>(d, 0)}; }

Character character_at(std::size_t dual_index, std::size_t m, std::size_t d) {
  return Character{PointCodec(m, d).decode(dual_index)};
}

std::uint32_t char_phase(const Pairing& pairing, const Character& chi,
                         std::span<const Elem> x) {
  if (x.size() != chi.dimension()) throw ArgumentError("character/point dimension mismatch");
  const std::uint32_t D = pairing.denominator();
  std::uint32_t phase = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    phase = (phase + pairing.numerator(chi.dual[i], x[i])) % D;
  }
  return phase;
}

Complex char_eval(const Pairing& pairing, const Character& chi, std::span<const Elem> x) {
  const std::uint32_t phase = char_phase(pairing, chi, x);
  return std::polar(1.0, 2.0 * std::numbers::pi * phase / pairing.denominator());
}

std::vector<Complex> roots_of_unity(std::uint32_t denominator) {
  std::vector<Complex> roots(denominator);
  for (std::uint32_t k = 0; k < denominator; ++k) {
    // Exact values on the axes keep ±1, ±i free of rounding noise.
    if (4 * k == 0) {
      roots[k] = {1.0, 0.0};
    } else if (2 * k == denominator) {
      roots[k] = {-1.0, 0.0};
    } else if (4 * k == denominator) {
      roots[k] = {0.0, 1.0};
    } else if (4 * k == 3 * denominator) {
      roots[k] = {0.0, -1.0};
    } else {
      roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / denominator);
    }
  }
  return roots;
}

GridFunction::GridFunction(RingPtr ring, std::size_t d)
    : ring_(std::move(ring)), d_(d), values_(grid_size(ring_->size(), d)) {}

GridFunction::GridFunction(RingPtr ring, std::size_t d, std::vector<Complex> values)
    : ring_(std::move(ring)), d_(d), values_(std::move(values)) {
  if (values_.size() != grid_size(ring_->size(), d)) {
    throw ArgumentError("grid function has the wrong number of values");
  }
}

double GridFunction::norm_squared() const {
  double acc = 0.0;
  for (const auto& v : values_) acc += std::norm(v);
  return acc;
}

double GridFunction::norm() const { return std::sqrt(norm_squared()); }

Complex GridFunction::sum() const {
  Complex acc = 0.0;
  for (const auto& v : values_) acc += v;
  return acc;
}

bool GridFunction::certify_mean_zero() {
  const double scale = std::sqrt(static_cast<double>(values_.size()));
  mean_zero_ = std::abs(sum()) <= 1e-9 * norm() * scale;
  return mean_zero_;
}

std::vector<std::uint32_t> character_phases(const Pairing& pairing, const Character& chi) {
  const std::size_t m = pairing.ring()->size();
  const std::size_t d = chi.dimension();
  const std::uint32_t D = pairing.denominator();
  std::vector<std::uint32_t> phases(grid_size(m, d), 0);
  std::size_t block = 1;
  for (std::size_t k = 0; k < d; ++k) {
    const Elem a = chi.dual[k];
    if (a >= m) throw ArgumentError("dual element out of range");
    // Fill higher slices first so the x_k = 0 slice is still intact.
    for (std::size_t xk = m; xk-- > 0;) {
      const std::uint32_t shift = pairing.numerator(a, static_cast<Elem>(xk));
      for (std::size_t r = 0; r < block; ++r) phases[xk * block + r] = (phases[r] + shift) % D;
    }
    block *= m;
  }
  return phases;
}

GridFunction character_grid(const Pairing& pairing, const Character& chi) {
  const auto phases = character_phases(pairing, chi);
  const auto roots = roots_of_unity(pairing.denominator());
  std::vector<Complex> values(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) values[i] = roots[phases[i]];
  return GridFunction(pairing.ring(), chi.dimension(), std::move(values));
}

std::vector<Complex> fourier_transform(const Pairing& pairing, const GridFunction& f,
                                       std::size_t workers) {
  if (f.ring() != pairing.ring()) throw ArgumentError("function and pairing rings differ");
  const std::size_t m = pairing.ring()->size();
  const std::size_t d = f.dimension();
  const std::size_t n = f.size();
  const auto roots = roots_of_unity(pairing.denominator());
  const double scale = 1.0 / static_cast<double>(n);
  std::vector<Complex> coefficients(n);
  const auto values = f.values();
  parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      const auto phases = character_phases(pairing, character_at(a, m, d));
      Complex acc = 0.0;
      for (std::size_t x = 0; x < n; ++x) acc += values[x] * roots[phases[x]];
      coefficients[a] = acc * scale;
    }
  });
  return coefficients;
}

GridFunction inverse_fourier(const Pairing& pairing, std::span<const Complex> coefficients,
                             std::size_t d, std::size_t workers) {
  const std::size_t m = pairing.ring()->size();
  const std::size_t n = grid_size(m, d);
  if (coefficients.size() != n) throw ArgumentError("coefficient count mismatch");
  const auto roots = roots_of_unity(pairing.denominator());
  const std::uint32_t D = pairing.denominator();
  std::vector<Complex> values(n);
  parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
    // Each worker owns its x-range; every dual contributes conj(chi_a(x)).
    for (std::size_t a = 0; a < n; ++a) {
      const auto phases = character_phases(pairing, character_at(a, m, d));
      for (std::size_t x = begin; x < end; ++x) {
        values[x] += coefficients[a] * roots[(D - phases[x]) % D];
      }
    }
  });
  return GridFunction(pairing.ring(), d, std::move(values));
}

Character pullback_character(const QuotientMap& projection, const Pairing& source_pairing,
                             const Pairing& quotient_pairing, const Character& chi_tilde) {
  if (projection.source != source_pairing.ring() ||
      projection.target != quotient_pairing.ring()) {
    throw ArgumentError("projection does not match the pairings' rings");
  }
  const RingTable& R = *projection.source;
  const RingTable& Q = *projection.target;
  const std::uint64_t DR = source_pairing.denominator();
  const std::uint64_t DQ = quotient_pairing.denominator();
  const std::uint64_t DL = DR * DQ;

  std::map<Elem, Elem> lifted;
  Character chi;
  for (Elem at : chi_tilde.dual) {
    if (at >= Q.size()) throw ArgumentError("dual element outside the quotient ring");
    auto it = lifted.find(at);
    if (it == lifted.end()) {
      std::optional<Elem> found;
      for (Elem a = 0; a < R.size() && !found; ++a) {
        bool match = true;
        for (Elem x = 0; x < R.size() && match; ++x) {
          const std::uint64_t lhs = source_pairing.numerator(a, x) * DQ % DL;
          const std::uint64_t rhs =
              quotient_pairing.numerator(at, projection.projection[x]) * DR % DL;
          match = lhs == rhs;
        }
        if (match) found = a;
      }
      if (!found) throw std::logic_error("quotient character has no pullback");
      it = lifted.emplace(at, *found).first;
    }
    chi.dual.push_back(it->second);
  }
  return chi;
}

Character matrix_witness_character(const Pairing& pairing, std::size_t d) {
  const RingTable& R = *pairing.ring();
  if (R.kind() != RingKind::mat) throw ArgumentError("witness character needs a matrix ring");
  const Pairing field = build_pairing(R.components().front());
  const RingTable& F = *field.ring();
  std::vector<Elem> e11(std::size_t{R.matrix_dim()} * R.matrix_dim(), 0);
  e11[0] = F.one();
  const Elem dual = R.from_matrix_entries(e11);
  // beta(E_11, A) must equal the field pairing of 1 with A's (0,0) entry.
  for (Elem a = 0; a < R.size(); ++a) {
    const std::uint64_t lhs = std::uint64_t{pairing.numerator(dual, a)} * field.denominator();
    const std::uint64_t rhs =
        std::uint64_t{field.numerator(F.one(), R.matrix_entries(a)[0])} * pairing.denominator();
    if (lhs != rhs) throw std::logic_error("witness dual does not read the upper-left entry");
  }
  Character chi{std::vector<Elem>(d, dual)};
  if (chi.trivial()) throw std::logic_error("witness character is trivial");
  return chi;
}

}  // namespace finring
