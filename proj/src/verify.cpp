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

#include "finring/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <random>
#include <sstream>

#include "finring/error.hpp"

namespace finring {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Rings are immutable, so repeated checks on the same spec share one table.
RingPtr shared_ring(const RingSpec& spec) {
  static std::mutex mutex;
  static std::map<std::string, RingPtr> cache;
  const std::string key = canonical_string(spec);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  RingPtr ring = build_ring(spec);
  std::lock_guard lock(mutex);
  return cache.emplace(key, ring).first->second;
}

double ipow(double base, double exponent) { return std::pow(base, exponent); }

double salem_scale(std::size_t m, std::size_t d) { return ipow(double(m), (d - 1) / 2.0); }

double character_ratio(const IncidenceOperator& op, const Pairing& pairing, const Character& chi) {
  return operator_ratio(op, character_grid(pairing, chi));
}

Elem pick_t(const RingTable& ring, std::optional<Elem> t) {
  const Elem value = t.value_or(ring.one());
  if (value >= ring.size() || !ring.is_unit(value)) throw ArgumentError("t must be a unit");
  return value;
}

SubCheck sub(std::string name, double observed, double bound, bool passed) {
  return SubCheck{std::move(name), observed, bound, passed};
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Dual element of the character used for a simple factor: E_11 for matrix
// rings, 1 for fields.
Elem simple_witness_dual(const RingTable& ring) {
  switch (ring.kind()) {
    case RingKind::mat: {
      std::vector<Elem> e(std::size_t{ring.matrix_dim()} * ring.matrix_dim(), 0);
      e[0] = ring.components().front()->one();
      return ring.from_matrix_entries(e);
    }
    case RingKind::gf:
      return ring.one();
    case RingKind::zmod:
      if (is_prime(ring.size())) return ring.one();
      break;
    default:
      break;
  }
  throw ArgumentError(ring.description() + " is not a matrix ring or field");
}

bool has_simple_witness(const RingTable& ring) {
  return ring.kind() == RingKind::mat || ring.kind() == RingKind::gf ||
         (ring.kind() == RingKind::zmod && is_prime(ring.size()));
}

Character semisimple_character(const RingTable& ring, std::size_t d) {
  if (ring.kind() == RingKind::prod) {
    const auto& factors = ring.components();
    std::vector<Elem> parts(factors.size(), 0);
    parts[0] = simple_witness_dual(*factors[0]);
    return Character{std::vector<Elem>(d, ring.from_product_parts(parts))};
  }
  return Character{std::vector<Elem>(d, simple_witness_dual(ring))};
}

// Nontrivial dual indices, all of them or 16 by stride when there are more
// than 256.
std::vector<std::size_t> sampled_duals(std::size_t count) {
  std::vector<std::size_t> out;
  if (count <= 1) return out;
  const std::size_t nontrivial = count - 1;
  if (nontrivial <= 256) {
    for (std::size_t i = 1; i < count; ++i) out.push_back(i);
    return out;
  }
  const std::size_t stride = nontrivial / 16;
  for (std::size_t k = 0; k < 16; ++k) out.push_back(1 + k * stride);
  return out;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, std::size_t n, std::size_t size) {
  std::vector<std::uint32_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < size; ++i) {
    std::swap(pool[i], pool[i + rand_below(rng, n - i)]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Elem dot(const RingTable& ring, std::span<const Elem> left, std::span<const Elem> right) {
  Elem acc = 0;
  for (std::size_t i = 0; i < left.size(); ++i) acc = ring.add(acc, ring.mul(left[i], right[i]));
  return acc;
}

std::string label_of(const RingTable& ring) {
  if (ring.spec()) return display_string(*ring.spec());
  return ring.description();
}

void append(std::vector<TheoremCheck>& out, std::vector<TheoremCheck> more) {
  for (auto& c : more) out.push_back(std::move(c));
}

// Runs a check, turning exceptions into a failed entry so one broken
// instance does not hide the rest of a suite.
template <class F>
TheoremCheck guarded(const std::string& id, const std::string& instance, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    TheoremCheck failed;
    failed.id = id;
    failed.instance = instance;
    failed.passed = false;
    failed.notes.push_back(std::string("error: ") + e.what());
    return failed;
  }
}

}  // namespace

std::string to_string(Direction direction) {
  switch (direction) {
    case Direction::at_most:
      return "<=";
    case Direction::at_least:
      return ">=";
    case Direction::equal:
      return "==";
  }
  return "?";
}

void settle(TheoremCheck& check) {
  switch (check.direction) {
    case Direction::at_most:
      check.margin = check.claimed_bound - check.observed;
      break;
    case Direction::at_least:
      check.margin = check.observed - check.claimed_bound;
      break;
    case Direction::equal:
      check.margin = -std::abs(check.observed - check.claimed_bound);
      break;
  }
  check.passed = check.margin >= -check.tolerance;
  for (const auto& s : check.sub_checks) check.passed = check.passed && s.passed;
}

std::string instance_string(const RingTable& ring, std::size_t d, Elem t) {
  return label_of(ring) + " d=" + std::to_string(d) + " t=" + ring.label(t);
}

TheoremCheck check_field_upper(std::uint32_t q, std::size_t d, std::optional<Elem> t,
                               const VerifyOptions& options) {
  const RingPtr ring = shared_ring(gf_q(q));
  const Elem tt = pick_t(*ring, t);
  const auto op = build_incidence(ring, d, tt, options.spectral.workers);
  const auto report = norm_on_meanzero(op, options.spectral);
  TheoremCheck check;
  check.id = "finiteFieldsBound";
  check.instance = instance_string(*ring, d, tt);
  check.direction = Direction::at_most;
  check.claimed_bound = kSqrt2;
  check.observed = *report.salem;
  check.sub_checks.push_back(sub("converged", report.converged, 1, report.converged));
  check.notes.push_back("method " + report.method);
  settle(check);
  return check;
}

TheoremCheck check_matrix_lower(std::uint32_t n, std::uint32_t q, std::size_t d,
                                const VerifyOptions& options) {
  const auto pk = prime_power(q);
  if (!pk) throw ArgumentError(std::to_string(q) + " is not a prime power");
  const GfSpec field_spec = gf_spec(pk->first, pk->second);
  const RingPtr ring = shared_ring(mat(n, field_spec));
  const RingTable& R = *ring;
  const RingTable& F = *R.components().front();
  const std::size_t m = R.size();
  const Elem t = R.one();
  const auto op = build_incidence(ring, d, t, options.spectral.workers);
  const Pairing pairing = build_pairing(ring);
  const Pairing field_pairing = build_pairing(R.components().front());
  const Character chi = matrix_witness_character(pairing, d);
  GridFunction g = character_grid(pairing, chi);
  const GridFunction Ag = apply(op, g, options.spectral.workers);

  TheoremCheck check;
  check.id = n == 1 ? "generalLower" : "matrixRings";
  check.instance = instance_string(R, d, t);
  check.direction = Direction::at_least;
  const double nn = double(n) * n;
  check.claimed_bound = 0.5 * ipow(q, (nn - n) * (d - 1) / 2.0);
  check.observed = Ag.norm() / (salem_scale(m, d) * g.norm());
  check.notes.push_back("bound exponent read as (n^2-n)(d-1)/2");

  const double expected_norm = ipow(q, nn * d / 2.0);
  check.sub_checks.push_back(sub("chi norm", g.norm(), expected_norm,
                                 relative_gap(g.norm(), expected_norm) <= 1e-12));
  const bool in_w = g.certify_mean_zero();
  check.sub_checks.push_back(sub("chi mean zero", std::abs(g.sum()), 0, in_w));

  // S: x_1 invertible and every row of x_i' (first row shifted by the first
  // row of x_1) in the span of the lower rows of x_1.
  const std::size_t qn = static_cast<std::size_t>(ipow(q, n));
  auto encode_row = [&](std::span<const Elem> row) {
    std::size_t code = 0;
    for (std::size_t j = n; j-- > 0;) code = code * q + row[j];
    return code;
  };
  std::map<Elem, std::vector<char>> spans;
  auto lower_span = [&](Elem x1) -> const std::vector<char>& {
    auto it = spans.find(x1);
    if (it != spans.end()) return it->second;
    const auto e = R.matrix_entries(x1);
    std::vector<char> member(qn, 0);
    std::vector<Elem> coeff(n - 1, 0), v(n);
    while (true) {
      std::fill(v.begin(), v.end(), 0);
      for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t j = 0; j < n; ++j) v[j] = F.add(v[j], F.mul(coeff[r - 1], e[r * n + j]));
      }
      member[encode_row(v)] = 1;
      std::size_t i = 0;
      while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
      if (i == coeff.size()) break;
    }
    return spans.emplace(x1, std::move(member)).first->second;
  };

  const PointCodec codec(m, d);
  const auto roots = roots_of_unity(field_pairing.denominator());
  const double value_scale = ipow(q, nn * (d - 1));
  std::uint64_t s_count = 0;
  double worst_value_error = 0.0;
  std::vector<Elem> x(d), row(n);
  for (std::size_t p = 0; p < codec.points(); ++p) {
    codec.decode(p, x);
    if (!R.is_unit(x[0])) continue;
    const auto& span = lower_span(x[0]);
    const auto e1 = R.matrix_entries(x[0]);
    bool in_s = true;
    for (std::size_t i = 1; i < d && in_s; ++i) {
      const auto ei = R.matrix_entries(x[i]);
      for (std::size_t r = 0; r < n && in_s; ++r) {
        for (std::size_t j = 0; j < n; ++j) {
          row[j] = r == 0 ? F.sub(ei[j], e1[j]) : ei[r * n + j];
        }
        in_s = span[encode_row(row)] != 0;
      }
    }
    if (!in_s) continue;
    ++s_count;
    const Elem corner = R.matrix_entries(R.mul(t, R.unit_inverse(x[0])))[0];
    const Complex expected = value_scale * roots[field_pairing.numerator(F.one(), corner)];
    worst_value_error = std::max(worst_value_error, std::abs(Ag[p] - expected));
  }
  const double expected_s = double(R.units().size()) * ipow(q, (nn - n) * (d - 1));
  check.sub_checks.push_back(sub("|S|", double(s_count), expected_s, double(s_count) == expected_s));
  check.sub_checks.push_back(sub("A chi on S", worst_value_error, 0,
                                 worst_value_error <= 1e-9 * value_scale));
  settle(check);
  return check;
}

double trivial_char_ratio(const IncidenceOperator& op) {
  long double squares = 0;
  for (std::size_t x = 0; x < op.points(); ++x) {
    const long double r = op.rows().row_size(x);
    squares += r * r;
  }
  return static_cast<double>(std::sqrt(squares / op.points()));
}

TheoremCheck check_trivial_char(const RingSpec& spec, std::size_t d, std::optional<Elem> t) {
  const RingPtr ring = shared_ring(spec);
  const RingTable& R = *ring;
  const Elem tt = pick_t(R, t);
  const auto op = build_incidence(ring, d, tt);
  const std::size_t m = R.size();
  TheoremCheck check;
  check.id = "trivialChar";
  check.instance = instance_string(R, d, tt);
  check.direction = Direction::at_least;
  check.observed = trivial_char_ratio(op);
  check.claimed_bound = double(R.units().size()) * ipow(m, double(d) - 2);
  if (m == 2) {
    check.id = "BooleanRings";
    const double exact = ipow(2, d / 2.0 - 1) * std::sqrt(ipow(2, d) - 1);
    check.sub_checks.push_back(
        sub("exact value", check.observed, exact, relative_gap(check.observed, exact) <= 1e-10));
  }
  if (R.kind() == RingKind::mat) {
    const double quarter = 0.25 * ipow(m, double(d) - 1);
    check.sub_checks.push_back(sub("matrix form", check.observed, quarter,
                                   check.observed >= quarter - 1e-6));
  }
  settle(check);
  return check;
}

TheoremCheck check_product_factorization(const RingSpec& spec1, const RingSpec& spec2,
                                         std::size_t d, Elem t1, Elem t2,
                                         const std::vector<Elem>& dual1,
                                         const std::vector<Elem>& dual2) {
  if (dual1.size() != d || dual2.size() != d) throw ArgumentError("dual length must equal d");
  const RingPtr r1 = shared_ring(spec1);
  const RingPtr r2 = shared_ring(spec2);
  const RingPtr rp = shared_ring(prod({spec1, spec2}));
  const RingTable& P = *rp;
  const Elem tp = P.from_product_parts(std::vector<Elem>{t1, t2});
  const auto op1 = build_incidence(r1, d, t1);
  const auto op2 = build_incidence(r2, d, t2);
  const auto opp = build_incidence(rp, d, tp);
  const Pairing b1 = build_pairing(r1), b2 = build_pairing(r2), bp = build_pairing(rp);
  const Character c1{dual1}, c2{dual2};
  Character cp;
  for (std::size_t i = 0; i < d; ++i) {
    cp.dual.push_back(P.from_product_parts(std::vector<Elem>{dual1[i], dual2[i]}));
  }
  const GridFunction g1 = character_grid(b1, c1), g2 = character_grid(b2, c2);
  GridFunction gp = character_grid(bp, cp);
  const double lhs = apply(opp, gp).norm();
  const double rhs = apply(op1, g1).norm() * apply(op2, g2).norm();

  TheoremCheck check;
  check.id = "Products";
  check.instance = instance_string(P, d, tp);
  check.direction = Direction::equal;
  check.observed = lhs;
  check.claimed_bound = rhs;
  check.tolerance = 1e-8 * std::max(1.0, std::abs(rhs));

  // chi(x) = chi1(x1) chi2(x2) pointwise.
  const PointCodec cpd(P.size(), d), c1d(r1->size(), d), c2d(r2->size(), d);
  double worst = 0.0;
  std::vector<Elem> x(d), x1(d), x2(d);
  for (std::size_t p = 0; p < cpd.points(); ++p) {
    cpd.decode(p, x);
    for (std::size_t i = 0; i < d; ++i) {
      const auto parts = P.product_parts(x[i]);
      x1[i] = parts[0];
      x2[i] = parts[1];
    }
    worst = std::max(worst, std::abs(gp[p] - g1[c1d.encode(x1)] * g2[c2d.encode(x2)]));
  }
  check.sub_checks.push_back(sub("pointwise factorization", worst, 0, worst <= 1e-12));
  const bool nontrivial = !c1.trivial() || !c2.trivial();
  const bool in_w = gp.certify_mean_zero();
  check.sub_checks.push_back(sub("chi in W iff a factor is nontrivial", in_w, nontrivial,
                                 in_w == nontrivial));
  settle(check);
  return check;
}

TheoremCheck check_jacobson_amplification(const RingSpec& spec, std::size_t d,
                                          std::optional<Elem> t,
                                          const VerifyOptions& options) {
  const RingPtr ring = shared_ring(spec);
  const RingTable& R = *ring;
  const Ideal J = jacobson_radical(ring);
  if (J.size() == 1) {
    throw ArgumentError(display_string(spec) + " has trivial radical; use the semisimple checks");
  }
  const Elem tt = pick_t(R, t);
  const QuotientMap qm = quotient_ring(J);
  const RingTable& Q = *qm.target;
  const Elem tq = qm.projection[tt];
  const std::size_t workers = options.spectral.workers;
  const auto op = build_incidence(ring, d, tt, workers);
  const auto opq = build_incidence(qm.target, d, tq, workers);
  const Pairing br = build_pairing(ring), bq = build_pairing(qm.target);
  const PointCodec codec(R.size(), d), qcodec(Q.size(), d);
  const double amplification = ipow(double(J.size()), double(d) - 1);

  TheoremCheck check;
  check.id = "JacobsonBound";
  check.instance = instance_string(R, d, tt);
  check.direction = Direction::at_least;
  check.tolerance = 1e-8;
  check.notes.push_back("|J|=" + std::to_string(J.size()) + " R/J size " +
                        std::to_string(Q.size()));

  // Reduction of every grid point.
  std::vector<std::size_t> reduce(codec.points());
  {
    std::vector<Elem> x(d), xq(d);
    for (std::size_t p = 0; p < codec.points(); ++p) {
      codec.decode(p, x);
      for (std::size_t i = 0; i < d; ++i) xq[i] = qm.projection[x[i]];
      reduce[p] = qcodec.encode(xq);
    }
  }

  // K_x = #{r in J^d : r.x = 0} for every x with a nonempty row.
  std::vector<std::uint64_t> kernel(codec.points(), 0);
  std::uint64_t admissible = 0, kernel_min = UINT64_MAX;
  {
    const PointCodec jcodec(J.size(), d);
    std::vector<Elem> x(d), jr(d), r(d);
    for (std::size_t p = 0; p < codec.points(); ++p) {
      if (op.rows().row_size(p) == 0) continue;
      codec.decode(p, x);
      std::uint64_t count = 0;
      for (std::size_t k = 0; k < jcodec.points(); ++k) {
        jcodec.decode(k, jr);
        for (std::size_t i = 0; i < d; ++i) r[i] = J.members[jr[i]];
        count += dot(R, r, x) == 0;
      }
      kernel[p] = count;
      ++admissible;
      kernel_min = std::min(kernel_min, count);
    }
  }
  check.sub_checks.push_back(sub("kernel bound", double(kernel_min), amplification,
                                 admissible > 0 && double(kernel_min) >= amplification));

  double worst_margin = INFINITY, worst_pointwise = 0.0, worst_pullback = 0.0;
  std::size_t characters = 0;
  for (std::size_t idx : sampled_duals(qcodec.points())) {
    const Character chi_q = character_at(idx, Q.size(), d);
    const Character chi = pullback_character(qm, br, bq, chi_q);
    const GridFunction g = character_grid(br, chi);
    const GridFunction gq = character_grid(bq, chi_q);
    const GridFunction Ag = apply(op, g, workers);
    const GridFunction Agq = apply(opq, gq, workers);
    const double ratio = Ag.norm() / g.norm();
    const double bound = amplification * Agq.norm() / gq.norm();
    const double margin = ratio - bound;
    if (margin < worst_margin) {
      worst_margin = margin;
      check.observed = ratio;
      check.claimed_bound = bound;
    }
    for (std::size_t p = 0; p < codec.points(); ++p) {
      worst_pullback = std::max(worst_pullback, std::abs(g[p] - gq[reduce[p]]));
      if (op.rows().row_size(p) == 0) continue;
      const Complex expected = double(kernel[p]) * Agq[reduce[p]];
      worst_pointwise = std::max(worst_pointwise, std::abs(Ag[p] - expected));
    }
    ++characters;
  }
  check.notes.push_back(std::to_string(characters) + " pulled-back characters");
  check.sub_checks.push_back(sub("pullback factors through R/J", worst_pullback, 0,
                                 worst_pullback <= 1e-12));
  check.sub_checks.push_back(sub("A chi = K_x A~ chi~", worst_pointwise, 0,
                                 worst_pointwise <= 1e-8 * std::max(1.0, double(R.size()))));

  // Lift y~ with y~.x~ = t~ to y = t (1 + t^{-1} s)^{-1} t^{-1} y'.
  std::vector<std::size_t> live;
  for (std::size_t p = 0; p < codec.points(); ++p) {
    if (op.rows().row_size(p) != 0) live.push_back(p);
  }
  std::mt19937_64 rng(options.seed);
  const Elem t_inv = R.unit_inverse(tt);
  std::size_t lifted = 0, attempts = 0;
  std::vector<Elem> x(d), yq(d), y(d);
  for (; attempts < 100 && !live.empty(); ++attempts) {
    const std::size_t p = live[rand_below(rng, live.size())];
    codec.decode(p, x);
    const auto solutions = opq.row(reduce[p]);
    if (solutions.empty()) break;
    qcodec.decode(solutions[rand_below(rng, solutions.size())], yq);
    for (std::size_t i = 0; i < d; ++i) y[i] = qm.representatives[yq[i]];
    const Elem s = R.sub(dot(R, y, x), tt);
    const Elem u = R.add(R.one(), R.mul(t_inv, s));
    if (!R.is_unit(u)) break;
    const Elem c = R.mul(R.mul(tt, R.unit_inverse(u)), t_inv);
    bool ok = true;
    for (std::size_t i = 0; i < d; ++i) {
      y[i] = R.mul(c, y[i]);
      ok = ok && qm.projection[y[i]] == yq[i];
    }
    ok = ok && dot(R, y, x) == tt;
    lifted += ok;
  }
  check.sub_checks.push_back(sub("congruence lifts", double(lifted), 100, lifted == 100));
  settle(check);
  return check;
}

TheoremCheck check_semisimple_lower(const RingSpec& spec, std::size_t d, std::optional<Elem> t) {
  const RingPtr ring = shared_ring(spec);
  const RingTable& R = *ring;
  if (jacobson_radical(ring).size() != 1) throw ArgumentError(display_string(spec) + " is not semisimple");
  const Elem tt = pick_t(R, t);
  const auto op = build_incidence(ring, d, tt);
  const Pairing pairing = build_pairing(ring);
  const Character chi = semisimple_character(R, d);
  GridFunction g = character_grid(pairing, chi);
  TheoremCheck check;
  check.id = "lowerBoundSemisimple";
  check.instance = instance_string(R, d, tt);
  check.direction = Direction::at_least;
  check.claimed_bound = 0.5;
  check.observed = apply(op, g).norm() / (salem_scale(R.size(), d) * g.norm());
  const bool in_w = g.certify_mean_zero();
  check.sub_checks.push_back(sub("chi mean zero", std::abs(g.sum()), 0, in_w));
  settle(check);
  return check;
}

TheoremCheck check_unit_independence(const RingSpec& spec, std::size_t d,
                                     const VerifyOptions& options) {
  const RingPtr ring = shared_ring(spec);
  const RingTable& R = *ring;
  double lo = INFINITY, hi = 0.0;
  TheoremCheck check;
  check.id = "allUnitsCreatedEqual";
  check.instance = label_of(R) + " d=" + std::to_string(d) + " t=all-units";
  bool converged = true;
  for (Elem u : R.units()) {
    const auto report = norm_on_meanzero(build_incidence(ring, d, u, options.spectral.workers),
                                         options.spectral);
    lo = std::min(lo, *report.norm_W);
    hi = std::max(hi, *report.norm_W);
    converged = converged && report.converged;
  }
  check.direction = Direction::at_most;
  check.claimed_bound = 1e-8;
  check.tolerance = 0.0;
  check.observed = hi > 0 ? (hi - lo) / hi : 0.0;
  check.notes.push_back(std::to_string(R.units().size()) + " units");
  check.sub_checks.push_back(sub("converged", converged, 1, converged));
  settle(check);
  return check;
}

TheoremCheck check_incidence_count(const RingSpec& spec, std::size_t d) {
  const RingPtr ring = shared_ring(spec);
  const RingTable& R = *ring;
  const auto op = build_incidence(ring, d, R.one());
  const double m = double(R.size());
  TheoremCheck check;
  check.id = "N(R)";
  check.instance = instance_string(R, d, R.one());
  check.observed = double(count_incidences(op));
  check.tolerance = 0.0;
  if (is_field(spec)) {
    check.direction = Direction::equal;
    check.claimed_bound = ipow(m, 2.0 * d - 1) - ipow(m, double(d) - 1);
  } else if (R.kind() == RingKind::mat) {
    check.direction = Direction::at_least;
    check.claimed_bound = 0.25 * ipow(m, 2.0 * d - 1);
  } else {
    // Rows of points with a unit coordinate are full.
    const double no_unit = ipow(m - double(R.units().size()), double(d));
    check.direction = Direction::at_least;
    check.claimed_bound = (ipow(m, double(d)) - no_unit) * ipow(m, double(d) - 1);
  }
  settle(check);
  return check;
}

TheoremCheck check_solver_agreement(const RingSpec& spec, std::size_t d,
                                    const VerifyOptions& options) {
  const RingPtr ring = shared_ring(spec);
  const auto op = build_incidence(ring, d, ring->one(), options.spectral.workers);
  SpectralOptions dense = options.spectral, power = options.spectral;
  dense.method = SpectralMethod::dense_svd;
  power.method = SpectralMethod::power_iteration;
  const auto dw = largest_singular_value(op, true, dense);
  const auto pw = largest_singular_value(op, true, power);
  const auto dv = largest_singular_value(op, false, dense);
  const auto pv = largest_singular_value(op, false, power);
  TheoremCheck check;
  check.id = "oracle";
  check.instance = instance_string(*ring, d, ring->one());
  check.direction = Direction::at_most;
  check.claimed_bound = 1e-8;
  check.tolerance = 0.0;
  check.observed = std::max(relative_gap(dw.value, pw.value), relative_gap(dv.value, pv.value));
  check.sub_checks.push_back(sub("power W below dense W", pw.value, dw.value,
                                 pw.value <= dw.value * (1 + 1e-10)));
  check.sub_checks.push_back(sub("norm_W <= norm_V", dw.value, dv.value,
                                 dw.value <= dv.value * (1 + 1e-12)));
  check.sub_checks.push_back(sub("converged", pw.converged && pv.converged, 1,
                                 pw.converged && pv.converged));
  settle(check);
  return check;
}

TheoremCheck check_nu_oracle(const RingSpec& spec, std::size_t d, std::size_t sets,
                             std::uint64_t seed) {
  const RingPtr ring = shared_ring(spec);
  const RingTable& R = *ring;
  const Elem t = R.one();
  const auto op = build_incidence(ring, d, t);
  const PointCodec codec(R.size(), d);
  const std::size_t n = codec.points();
  std::vector<std::vector<Elem>> coords(n);
  for (std::size_t p = 0; p < n; ++p) coords[p] = codec.decode(p);
  std::mt19937_64 rng(seed);
  std::size_t agree = 0;
  for (std::size_t s = 0; s < sets; ++s) {
    const auto set = random_subset(rng, n, rand_below(rng, n + 1));
    std::uint64_t brute = 0;
    for (auto x : set) {
      for (auto y : set) brute += dot(R, coords[x], coords[y]) == t;
    }
    agree += nu(op, set) == brute;
  }
  TheoremCheck check;
  check.id = "nu";
  check.instance = instance_string(R, d, t);
  check.direction = Direction::equal;
  check.tolerance = 0.0;
  check.claimed_bound = double(sets);
  check.observed = double(agree);
  settle(check);
  return check;
}

TheoremCheck check_nakayama(const RingSpec& spec) {
  const RingPtr ring = shared_ring(spec);
  const Ideal J = jacobson_radical(ring);
  if (J.size() == 1) throw ArgumentError(display_string(spec) + " has trivial radical");
  const QuotientMap qm = quotient_ring(J);
  const RingTable& Q = *qm.target;
  if (!Q.commutative() || Q.units().size() + 1 != Q.size()) {
    throw ArgumentError(display_string(spec) + ": R/J is not a field");
  }
  TheoremCheck check;
  check.id = "nakayama";
  check.instance = display_string(spec);
  check.direction = Direction::equal;
  check.tolerance = 0.0;
  check.observed = double(J.size() % Q.size());
  check.claimed_bound = 0.0;
  check.notes.push_back("|J|=" + std::to_string(J.size()) + " q=" + std::to_string(Q.size()));
  settle(check);
  return check;
}

std::uint64_t odd_subset_count(std::uint32_t k) {
  if (k < 1) throw ArgumentError("k must be at least 1");
  if (k > 20) throw ScaleError("odd subsets are enumerated only for k <= 20");
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) count += std::popcount(mask) & 1u;
  return count;
}

TheoremCheck check_odd_subsets(std::uint32_t k) {
  TheoremCheck check;
  check.id = "oddSubsets";
  check.instance = "k=" + std::to_string(k);
  check.direction = Direction::equal;
  check.tolerance = 0.0;
  check.observed = double(odd_subset_count(k));
  check.claimed_bound = ipow(2, double(k) - 1);
  settle(check);
  return check;
}

bool contains_t(const IncidenceOperator& op, std::span<const std::uint32_t> set) {
  std::vector<char> member(op.points(), 0);
  for (auto x : set) member[x] = 1;
  for (auto x : set) {
    for (auto y : op.row(x)) {
      if (member[y]) return true;
    }
  }
  return false;
}

EdotEReport edot_experiment(const RingSpec& spec, std::size_t d, std::optional<Elem> t,
                            std::size_t trials, std::uint64_t seed,
                            const VerifyOptions& options) {
  const RingPtr ring = shared_ring(spec);
  const RingTable& R = *ring;
  if (!opposite_iso(R)) {
    throw ArgumentError(display_string(spec) + " has no isomorphism with its opposite ring");
  }
  const Elem tt = pick_t(R, t);
  const auto op = build_incidence(ring, d, tt, options.spectral.workers);
  const auto report = norm_on_meanzero(op, options.spectral);
  const double m = double(R.size());
  const std::size_t n = op.points();

  EdotEReport out;
  out.ring = display_string(spec);
  out.d = d;
  out.t_label = R.label(tt);
  out.measured_salem = *report.salem;
  out.incidences = count_incidences(op);
  out.threshold = 2 * out.measured_salem * salem_scale(R.size(), d) * ipow(m, 2.0 * d) /
                  double(out.incidences);
  if (is_field(spec)) {
    out.corollary_threshold = 2 * kSqrt2 / (1 - ipow(m, -double(d))) * ipow(m, (d + 1) / 2.0);
  } else if (R.kind() == RingKind::mat) {
    out.corollary_threshold = 8 * out.measured_salem * ipow(m, (d + 1) / 2.0);
  }
  if (out.corollary_threshold) out.corollary_vacuous = *out.corollary_threshold >= double(n);
  out.trials = trials;
  out.seed = seed;
  // Smallest size strictly above the threshold.
  const double above = std::floor(out.threshold) + 1;
  out.vacuous = above > double(n);
  out.set_size = out.vacuous ? n : static_cast<std::size_t>(above);

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    if (!contains_t(op, random_subset(rng, n, out.set_size))) ++out.failures;
  }

  if (n <= 4096) {
    std::mt19937_64 probe(seed + 1);
    for (std::size_t s = 1; s <= out.set_size; ++s) {
      bool all = true;
      for (std::size_t i = 0; i < trials && all; ++i) all = contains_t(op, random_subset(probe, n, s));
      if (all) {
        out.minimal_working_size = s;
        break;
      }
    }
  }
  return out;
}

TheoremCheck check_edot(const EdotEReport& report) {
  TheoremCheck check;
  check.id = "EdotE";
  check.instance = report.ring + " d=" + std::to_string(report.d) + " t=" + report.t_label;
  check.direction = Direction::equal;
  check.tolerance = 0.0;
  check.observed = double(report.failures);
  check.claimed_bound = 0.0;
  check.sub_checks.push_back(sub("set size above threshold", double(report.set_size),
                                 report.threshold,
                                 report.vacuous || double(report.set_size) > report.threshold));
  std::ostringstream note;
  note << report.trials << " trials of |E|=" << report.set_size;
  check.notes.push_back(note.str());
  if (report.vacuous) check.notes.push_back("threshold is at least m^d; guarantee is vacuous");
  if (report.corollary_vacuous) check.notes.push_back("closed-form corollary threshold is vacuous");
  settle(check);
  return check;
}

TheoremCheck check_ideal_obstruction(const RingSpec& spec, std::size_t d, std::optional<Elem> t,
                                     const VerifyOptions& options) {
  const RingPtr ring = shared_ring(spec);
  const RingTable& R = *ring;
  const Elem tt = pick_t(R, t);
  const Ideal* chosen = nullptr;
  const auto ideals = principal_left_ideals(ring);
  for (const auto& I : ideals) {
    if (I.size() > 1 && I.size() < R.size()) {
      chosen = &I;
      break;
    }
  }
  if (!chosen) throw ArgumentError(display_string(spec) + " has no proper nonzero principal ideal");
  const auto op = build_incidence(ring, d, tt, options.spectral.workers);
  // E = I^d.
  const PointCodec icodec(chosen->size(), d), codec(R.size(), d);
  std::vector<std::uint32_t> set;
  std::vector<Elem> c(d), x(d);
  for (std::size_t k = 0; k < icodec.points(); ++k) {
    icodec.decode(k, c);
    for (std::size_t i = 0; i < d; ++i) x[i] = chosen->members[c[i]];
    set.push_back(static_cast<std::uint32_t>(codec.encode(x)));
  }
  std::sort(set.begin(), set.end());

  TheoremCheck check;
  check.id = "idealBound";
  check.instance = instance_string(R, d, tt);
  check.direction = Direction::equal;
  check.tolerance = 0.0;
  check.observed = double(nu(op, set));
  check.claimed_bound = 0.0;
  check.notes.push_back("|I|=" + std::to_string(chosen->size()));
  check.sub_checks.push_back(sub("t not in E.E", contains_t(op, set), 0, !contains_t(op, set)));
  if (opposite_iso(R)) {
    const double m = double(R.size());
    const double C = *norm_on_meanzero(op, options.spectral).salem;
    const double c = double(count_incidences(op)) / ipow(m, 2.0 * d - 1);
    const double bound = ipow(2 * C / c, 1.0 / d) * ipow(m, 0.5 + 0.5 / d);
    check.sub_checks.push_back(sub("ideal size bound", double(chosen->size()), bound,
                                   double(chosen->size()) <= bound + 1e-6));
    check.notes.push_back("size bound reads q as |R|");
  }
  settle(check);
  return check;
}

GraphReport graph_analysis(std::uint32_t q, std::size_t d, std::optional<Elem> t) {
  const auto pk = prime_power(q);
  if (!pk) throw ArgumentError(std::to_string(q) + " is not a prime power");
  return [&] {
    const RingSpec spec = gf_q(q);
    const RingPtr ring = shared_ring(spec);
    const RingTable& R = *ring;
    const Elem tt = pick_t(R, t);
    const std::size_t points = grid_size(q, d);
    if (points > 4096) throw ScaleError("graph analysis is limited to q^d <= 4096");
    const auto op = build_incidence(ring, d, tt);
    const std::size_t n = points - 1;  // vertex v is grid point v + 1

    GraphReport report;
    report.ring = display_string(spec);
    report.d = d;
    report.t_label = R.label(tt);
    report.vertices = n;

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(Eigen::Index(n), Eigen::Index(n));
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto row = op.row(v + 1);
      degree[v] = row.size();
      for (auto y : row) A(Eigen::Index(v), Eigen::Index(y) - 1) = 1.0;
    }
    if (!A.isApprox(A.transpose(), 0.0)) throw std::logic_error("field dot-product graph is not symmetric");
    if (std::all_of(degree.begin(), degree.end(), [&](std::size_t k) { return k == degree[0]; })) {
      report.regular_degree = degree[0];
    }

    std::vector<int> component(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
      if (component[start] >= 0) continue;
      std::size_t size = 0;
      std::queue<std::size_t> frontier;
      frontier.push(start);
      component[start] = int(report.components);
      while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop();
        ++size;
        for (auto y : op.row(v + 1)) {
          if (component[y - 1] < 0) {
            component[y - 1] = int(report.components);
            frontier.push(y - 1);
          }
        }
      }
      report.big_component_size = std::max(report.big_component_size, size);
      ++report.components;
    }
    report.connected = report.components == 1;
    report.connectivity_asserted = d > 2 || q > 2;

    Eigen::MatrixXd L = -A;
    for (std::size_t v = 0; v < n; ++v) L(Eigen::Index(v), Eigen::Index(v)) += double(degree[v]);
    const Eigen::VectorXd lap = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(L, Eigen::EigenvaluesOnly).eigenvalues();
    report.laplacian_gap = 0.0;
    for (Eigen::Index i = 0; i < lap.size(); ++i) {
      if (lap(i) > 1e-9) {
        report.laplacian_gap = lap(i);
        break;
      }
    }
    const Eigen::VectorXd adj = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A, Eigen::EigenvaluesOnly).eigenvalues();
    report.adjacency_min = adj.minCoeff();
    report.adjacency_max = adj.maxCoeff();
    report.laplacian_bound = ipow(q, double(d) - 1) - kSqrt2 * ipow(q, (d - 1) / 2.0);
    return report;
  }();
}

TheoremCheck check_graph(const GraphReport& report) {
  TheoremCheck check;
  check.id = "graph";
  check.instance = report.ring + " d=" + std::to_string(report.d) + " t=" + report.t_label;
  check.direction = Direction::at_least;
  check.observed = report.laplacian_gap;
  check.claimed_bound = report.laplacian_bound;
  const auto q = std::llround(std::pow(double(report.vertices + 1), 1.0 / report.d));
  const double degree = ipow(double(q), double(report.d) - 1);
  check.sub_checks.push_back(sub("regular degree", report.regular_degree.value_or(0), degree,
                                 report.regular_degree && double(*report.regular_degree) == degree));
  if (report.connectivity_asserted) {
    check.sub_checks.push_back(sub("connected", report.connected, 1, report.connected));
    check.sub_checks.push_back(sub("big component", double(report.big_component_size),
                                   double(report.vertices),
                                   report.big_component_size == report.vertices));
  } else {
    check.notes.push_back("connectivity not asserted for q=2, d=2");
  }
  settle(check);
  return check;
}

double witness_lower_bound(const RingPtr& ring, std::size_t d, Elem t) {
  const RingTable& R = *ring;
  const double scale = salem_scale(R.size(), d);
  const Ideal J = jacobson_radical(ring);
  if (J.size() > 1) {
    const QuotientMap qm = quotient_ring(J);
    const auto opq = build_incidence(qm.target, d, qm.projection[t]);
    const Pairing bq = build_pairing(qm.target);
    const double amplification = ipow(double(J.size()), double(d) - 1);
    double best = 0.0;
    for (std::size_t idx : sampled_duals(grid_size(qm.target->size(), d))) {
      const double ratio = character_ratio(opq, bq, character_at(idx, qm.target->size(), d));
      best = std::max(best, amplification * ratio / scale);
    }
    return best;
  }
  const auto op = build_incidence(ring, d, t);
  const Pairing pairing = build_pairing(ring);
  try {
    return character_ratio(op, pairing, semisimple_character(R, d)) / scale;
  } catch (const ArgumentError&) {
    // No named simple factor (zmod of a squarefree composite): best sampled character.
    double best = 0.0;
    for (std::size_t idx : sampled_duals(op.points())) {
      best = std::max(best, character_ratio(op, pairing, character_at(idx, R.size(), d)) / scale);
    }
    return best;
  }
}

std::vector<ScanRow> scan_salem(const std::vector<RingSpec>& family, std::size_t d,
                                const VerifyOptions& options) {
  std::vector<ScanRow> rows;
  for (const auto& spec : family) {
    ScanRow row;
    row.spec = display_string(spec);
    row.d = d;
    try {
      row.quotient_shape = quotient_shape(spec);
      const RingPtr ring = shared_ring(spec);
      row.size = ring->size();
      row.radical_size = jacobson_radical(ring).size();
      row.t_label = ring->label(ring->one());
      const auto op = build_incidence(ring, d, ring->one(), options.spectral.workers);
      const auto report = norm_on_meanzero(op, options.spectral);
      row.salem = report.salem;
      row.norm_W = report.norm_W;
      row.method = report.method;
      row.residual = report.residual;
      row.converged = report.converged;
      row.witness_lower = witness_lower_bound(ring, d, ring->one());
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return a.size != b.size ? a.size < b.size : a.spec < b.spec;
  });
  return rows;
}

std::vector<RingSpec> separation_family() {
  return {zmod(9), trunc(gf_spec(3), 2), mat(2, gf_spec(2)), zmod(25), trunc(gf_spec(5), 2)};
}

namespace {

std::vector<TheoremCheck> suite_fields(const VerifyOptions& o) {
  std::vector<TheoremCheck> out;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (std::size_t d : {2u, 3u}) {
      if (std::pow(double(q), double(d)) > 1024) continue;
      out.push_back(guarded("finiteFieldsBound", "gf(" + std::to_string(q) + ")",
                            [&] { return check_field_upper(q, d, {}, o); }));
    }
  }
  return out;
}

std::vector<TheoremCheck> suite_boolean(const VerifyOptions&) {
  std::vector<TheoremCheck> out;
  for (std::size_t d = 2; d <= 6; ++d) {
    out.push_back(guarded("BooleanRings", "gf(2)", [&] { return check_trivial_char(gf(2), d); }));
  }
  for (const auto& spec : {gf(3), gf(2, 2), zmod(4), mat(2, gf_spec(2))}) {
    out.push_back(guarded("trivialChar", display_string(spec),
                          [&] { return check_trivial_char(spec, 2); }));
  }
  for (std::uint32_t k : {1u, 3u, 5u, 10u, 20u}) out.push_back(check_odd_subsets(k));
  return out;
}

std::vector<TheoremCheck> suite_units(const VerifyOptions& o) {
  std::vector<TheoremCheck> out;
  for (const auto& spec : {gf(2, 2), gf(5), zmod(4), mat(2, gf_spec(2))}) {
    out.push_back(guarded("allUnitsCreatedEqual", display_string(spec),
                          [&] { return check_unit_independence(spec, 2, o); }));
  }
  return out;
}

std::vector<TheoremCheck> suite_counts(const VerifyOptions&) {
  std::vector<TheoremCheck> out;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    for (std::size_t d : {2u, 3u}) {
      out.push_back(guarded("N(R)", "gf(" + std::to_string(q) + ")",
                            [&] { return check_incidence_count(gf_q(q), d); }));
    }
  }
  out.push_back(guarded("N(R)", "mat(2,gf(2))",
                        [&] { return check_incidence_count(mat(2, gf_spec(2)), 2); }));
  return out;
}

std::vector<TheoremCheck> suite_matrix(const VerifyOptions& o) {
  std::vector<TheoremCheck> out;
  out.push_back(guarded("generalLower", "mat(1,gf(3))", [&] { return check_matrix_lower(1, 3, 2, o); }));
  out.push_back(guarded("matrixRings", "mat(2,gf(2))", [&] { return check_matrix_lower(2, 2, 2, o); }));
  out.push_back(guarded("matrixRings", "mat(2,gf(3))", [&] { return check_matrix_lower(2, 3, 2, o); }));
  return out;
}

std::vector<TheoremCheck> suite_products(const VerifyOptions&) {
  std::vector<TheoremCheck> out;
  for (const auto& [a, b] : {std::pair{gf(2), gf(3)}, std::pair{gf(2), gf(2)}}) {
    const RingPtr ra = shared_ring(a), rb = shared_ring(b);
    for (int combo = 0; combo < 4; ++combo) {
      const std::vector<Elem> d1 = {Elem(combo & 1), 0}, d2 = {0, Elem((combo >> 1) & 1)};
      out.push_back(guarded("Products", display_string(prod({a, b})), [&] {
        return check_product_factorization(a, b, 2, ra->one(), rb->one(), d1, d2);
      }));
    }
  }
  return out;
}

std::vector<TheoremCheck> suite_semisimple(const VerifyOptions&) {
  std::vector<TheoremCheck> out;
  for (const auto& spec : {gf(2), gf(3), gf(2, 2), mat(2, gf_spec(2)), prod({gf(2), gf(3)}),
                           prod({gf(2), gf(2)}), prod({mat(2, gf_spec(2)), gf(2)})}) {
    out.push_back(guarded("lowerBoundSemisimple", display_string(spec),
                          [&] { return check_semisimple_lower(spec, 2); }));
  }
  return out;
}

TheoremCheck radical_check(const RingSpec& spec, const std::vector<std::string>& expected) {
  const RingPtr ring = shared_ring(spec);
  const Ideal J = jacobson_radical(ring);
  std::vector<std::string> labels;
  for (Elem e : J.members) labels.push_back(ring->label(e));
  TheoremCheck check;
  check.id = "JacobsonFacts";
  check.instance = display_string(spec);
  check.direction = Direction::equal;
  check.tolerance = 0.0;
  check.observed = labels == expected ? 1.0 : 0.0;
  check.claimed_bound = 1.0;
  std::string joined;
  for (const auto& l : labels) joined += (joined.empty() ? "" : ",") + l;
  check.notes.push_back("J={" + joined + "}");
  settle(check);
  return check;
}

std::vector<TheoremCheck> suite_jacobson(const VerifyOptions& o) {
  std::vector<TheoremCheck> out;
  for (const auto& spec : {zmod(4), zmod(9), trunc(gf_spec(2), 2), zmod(8), trunc(gf_spec(3), 2)}) {
    out.push_back(guarded("JacobsonBound", display_string(spec),
                          [&] { return check_jacobson_amplification(spec, 2, {}, o); }));
  }
  out.push_back(radical_check(zmod(4), {"0", "2"}));
  out.push_back(radical_check(zmod(9), {"0", "3", "6"}));
  out.push_back(radical_check(trunc(gf_spec(2), 2), {"0", "e"}));
  out.push_back(radical_check(mat(2, gf_spec(2)), {"[[0,0],[0,0]]"}));
  for (const auto& spec : {zmod(4), zmod(9), zmod(25), trunc(gf_spec(2), 2), trunc(gf_spec(3), 3)}) {
    out.push_back(guarded("nakayama", display_string(spec), [&] { return check_nakayama(spec); }));
  }
  return out;
}

std::vector<TheoremCheck> suite_edot(const VerifyOptions& o) {
  std::vector<TheoremCheck> out;
  for (const auto& spec : {gf(5), gf(7)}) {
    out.push_back(guarded("EdotE", display_string(spec), [&] {
      return check_edot(edot_experiment(spec, 2, {}, o.trials, o.seed, o));
    }));
  }
  out.push_back(guarded("idealBound", "zmod(4)", [&] { return check_ideal_obstruction(zmod(4), 2, {}, o); }));
  return out;
}

std::vector<TheoremCheck> suite_graph(const VerifyOptions&) {
  std::vector<TheoremCheck> out;
  for (const auto& [q, d] : {std::pair{3u, std::size_t{2}}, std::pair{2u, std::size_t{3}},
                             std::pair{2u, std::size_t{2}}, std::pair{5u, std::size_t{2}}}) {
    out.push_back(guarded("graph", "gf(" + std::to_string(q) + ")",
                          [&] { return check_graph(graph_analysis(q, d)); }));
  }
  return out;
}

std::vector<RingSpec> oracle_family() {
  std::vector<RingSpec> family;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u}) family.push_back(gf_q(q));
  for (std::uint32_t n : {4u, 6u, 8u, 9u, 10u, 12u, 14u, 15u, 16u, 18u, 20u, 21u, 22u}) {
    family.push_back(zmod(n));
  }
  family.push_back(trunc(gf_spec(2), 2));
  family.push_back(trunc(gf_spec(3), 2));
  family.push_back(trunc(gf_spec(2), 3));
  family.push_back(trunc(gf_spec(2, 2), 2));
  family.push_back(prod({gf(2), gf(2)}));
  family.push_back(prod({gf(2), gf(3)}));
  family.push_back(prod({gf(3), gf(3)}));
  family.push_back(prod({gf(2), gf(2), gf(2)}));
  family.push_back(mat(2, gf_spec(2)));
  return family;
}

std::vector<TheoremCheck> suite_oracle(const VerifyOptions& o) {
  std::vector<TheoremCheck> out;
  for (const auto& spec : oracle_family()) {
    const auto m = ring_size(spec);
    for (std::size_t d = 2; std::pow(double(m), double(d)) <= double(kDenseLimit); ++d) {
      out.push_back(guarded("oracle", display_string(spec),
                            [&] { return check_solver_agreement(spec, d, o); }));
    }
  }
  for (const auto& spec : oracle_family()) {
    const auto m = ring_size(spec);
    for (std::size_t d = 2; std::pow(double(m), double(d)) <= 100; ++d) {
      out.push_back(guarded("nu", display_string(spec),
                            [&] { return check_nu_oracle(spec, d, 50, o.seed); }));
    }
  }
  return out;
}

std::vector<TheoremCheck> suite_separation(const VerifyOptions& o) {
  std::vector<TheoremCheck> out;
  for (const auto& row : scan_salem(separation_family(), 2, o)) {
    TheoremCheck check;
    check.id = "separation";
    check.instance = row.spec + " d=2 t=" + row.t_label;
    check.direction = Direction::at_least;
    check.claimed_bound = kSqrt2 + 1e-6;
    check.tolerance = 0.0;
    if (!row.error.empty()) check.notes.push_back("error: " + row.error);
    check.observed = row.salem.value_or(0.0);
    settle(check);
    // Strict separation.
    check.passed = check.passed && check.observed > check.claimed_bound && row.error.empty();
    out.push_back(std::move(check));
  }
  return out;
}

using Suite = std::vector<TheoremCheck> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"fields", suite_fields},       {"boolean", suite_boolean},
      {"units", suite_units},         {"counts", suite_counts},
      {"matrix", suite_matrix},       {"products", suite_products},
      {"semisimple", suite_semisimple}, {"jacobson", suite_jacobson},
      {"edot", suite_edot},           {"graph", suite_graph},
      {"oracle", suite_oracle},       {"separation", suite_separation},
  };
  return table;
}

}  // namespace

std::vector<TheoremCheck> run_ring_checks(const RingSpec& spec, std::size_t d,
                                          const VerifyOptions& options) {
  const RingPtr ring = shared_ring(spec);
  const RingTable& R = *ring;
  const std::string name = display_string(spec);
  std::vector<TheoremCheck> out;
  out.push_back(guarded("trivialChar", name, [&] { return check_trivial_char(spec, d); }));
  out.push_back(guarded("N(R)", name, [&] { return check_incidence_count(spec, d); }));
  out.push_back(guarded("allUnitsCreatedEqual", name,
                        [&] { return check_unit_independence(spec, d, options); }));
  if (std::pow(double(R.size()), double(d)) <= double(kDenseLimit)) {
    out.push_back(guarded("oracle", name, [&] { return check_solver_agreement(spec, d, options); }));
  }
  if (is_field(spec) && R.kind() != RingKind::mat) {
    out.push_back(guarded("finiteFieldsBound", name,
                          [&] { return check_field_upper(std::uint32_t(R.size()), d, {}, options); }));
  }
  if (const auto* m = std::get_if<MatSpec>(&spec.ctor)) {
    const std::uint32_t q = std::uint32_t(std::llround(std::pow(m->base.p, m->base.k)));
    if (m->base.modulus == default_modulus(m->base.p, m->base.k)) {
      out.push_back(guarded("matrixRings", name, [&] { return check_matrix_lower(m->n, q, d, options); }));
    }
  }
  if (jacobson_radical(ring).size() > 1) {
    out.push_back(guarded("JacobsonBound", name,
                          [&] { return check_jacobson_amplification(spec, d, {}, options); }));
    if (quotient_is_field(spec)) {
      out.push_back(guarded("nakayama", name, [&] { return check_nakayama(spec); }));
    }
  } else if (has_simple_witness(R.kind() == RingKind::prod ? *R.components()[0] : R)) {
    out.push_back(guarded("lowerBoundSemisimple", name, [&] { return check_semisimple_lower(spec, d); }));
  }
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names = {"all"};
  for (const auto& [name, fn] : suites()) names.push_back(name);
  return names;
}

std::vector<TheoremCheck> run_suite(const std::string& name, const VerifyOptions& options) {
  std::vector<TheoremCheck> out;
  bool found = false;
  for (const auto& [suite, fn] : suites()) {
    if (name == "all" || name == suite) {
      append(out, fn(options));
      found = true;
    }
  }
  if (!found) throw ArgumentError("unknown suite '" + name + "'");
  return out;
}

}  // namespace finring
