#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "finring/error.hpp"
#include "finring/verify.hpp"

using namespace finring;

namespace {

// 2x2 matrices over F_q as row-major entry arrays, plain integers.
using M2 = std::array<int, 4>;

M2 mul2(const M2& a, const M2& b, int q) {
  return {(a[0] * b[0] + a[1] * b[2]) % q, (a[0] * b[1] + a[1] * b[3]) % q,
          (a[2] * b[0] + a[3] * b[2]) % q, (a[2] * b[1] + a[3] * b[3]) % q};
}

std::vector<M2> all_m2(int q) {
  std::vector<M2> out;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) out.push_back({a, b, c, d});
  return out;
}

}  // namespace

TEST(FieldUpper, F3) {
  const auto c = check_field_upper(3, 2, 1);
  EXPECT_TRUE(c.passed);
  EXPECT_LE(c.observed, 1.4142136);
  EXPECT_NEAR(c.observed, 1.0, 1e-12);
  EXPECT_EQ(c.id, "finiteFieldsBound");
  EXPECT_EQ(c.instance, "gf(3) d=2 t=1");
}

TEST(FieldUpper, F2InDimensionThree) { EXPECT_TRUE(check_field_upper(2, 3, 1).passed); }

TEST(FieldUpper, F4AllUnitsIdentical) {
  const auto r = build_ring(gf(2, 2));
  std::vector<double> obs;
  for (Elem u : r->units()) obs.push_back(check_field_upper(4, 2, u).observed);
  ASSERT_EQ(obs.size(), 3u);
  EXPECT_NEAR(obs[0], obs[1], 1e-12);
  EXPECT_NEAR(obs[0], obs[2], 1e-12);
}

TEST(MatrixLower, Mat2F2) {
  const auto c = check_matrix_lower(2, 2, 2);
  EXPECT_TRUE(c.passed);
  EXPECT_DOUBLE_EQ(c.claimed_bound, 1.0);
  EXPECT_EQ(c.id, "matrixRings");
}

TEST(MatrixLower, OneByOneReducesToGeneralLower) {
  const auto c = check_matrix_lower(1, 3, 2);
  EXPECT_TRUE(c.passed);
  EXPECT_DOUBLE_EQ(c.claimed_bound, 0.5);
  EXPECT_EQ(c.id, "generalLower");
}

TEST(MatrixLower, WitnessSetSizeByEnumeration) {
  // S: x1 invertible; first row of x2 minus first row of x1 and the second
  // row of x2 both in the span of the second row of x1.
  const int q = 2;
  std::size_t count = 0;
  for (const auto& x1 : all_m2(q)) {
    if ((x1[0] * x1[3] - x1[1] * x1[2] + q) % q == 0) continue;
    auto in_span = [&](int a, int b) {
      for (int c = 0; c < q; ++c) {
        if (a == c * x1[2] % q && b == c * x1[3] % q) return true;
      }
      return false;
    };
    for (const auto& x2 : all_m2(q)) {
      if (in_span((x2[0] - x1[0] + q) % q, (x2[1] - x1[1] + q) % q) && in_span(x2[2], x2[3])) ++count;
    }
  }
  EXPECT_EQ(count, 24u);
  const auto c = check_matrix_lower(2, 2, 2);
  bool seen = false;
  for (const auto& s : c.sub_checks) {
    if (s.name == "|S|") {
      EXPECT_EQ(s.observed, double(count));
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST(TrivialChar, BooleanExactValues) {
  EXPECT_NEAR(check_trivial_char(gf(2), 2).observed, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(check_trivial_char(gf(2), 3).observed, std::sqrt(14.0), 1e-12);
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto c = check_trivial_char(gf(2), d);
    EXPECT_TRUE(c.passed);
    const double exact = std::pow(2.0, d / 2.0 - 1) * std::sqrt(std::pow(2.0, d) - 1);
    EXPECT_LE(std::abs(c.observed - exact), 1e-10 * exact);
  }
}

TEST(TrivialChar, Mat2F2) {
  // Oracle: sqrt(sum_x |row(x)|^2 / m^d) over plain integer matrices.
  const auto mats = all_m2(2);
  const M2 id = {1, 0, 0, 1};
  double squares = 0.0;
  for (const auto& x1 : mats) {
    for (const auto& x2 : mats) {
      double row = 0;
      for (const auto& y1 : mats) {
        for (const auto& y2 : mats) {
          const auto a = mul2(y1, x1, 2), b = mul2(y2, x2, 2);
          row += M2{(a[0] + b[0]) % 2, (a[1] + b[1]) % 2, (a[2] + b[2]) % 2, (a[3] + b[3]) % 2} == id;
        }
      }
      squares += row * row;
    }
  }
  const double oracle = std::sqrt(squares / 256.0);
  const auto c = check_trivial_char(mat(2, gf_spec(2)), 2);
  EXPECT_TRUE(c.passed);
  EXPECT_NEAR(c.observed, oracle, 1e-12);
  EXPECT_GE(c.observed, 4.0);
}

TEST(Products, BothTrivialMatchesFactorValues) {
  const auto c = check_product_factorization(gf(2), gf(3), 2, 1, 1, {0, 0}, {0, 0});
  EXPECT_TRUE(c.passed);
  const double f2 = check_trivial_char(gf(2), 2).observed * 2.0;  // times ||chi_0|| = 2
  const double f3 = check_trivial_char(gf(3), 2).observed * 3.0;
  EXPECT_NEAR(c.claimed_bound, f2 * f3, 1e-10);
}

TEST(Products, OneNontrivialFactor) {
  const auto c = check_product_factorization(gf(2), gf(3), 2, 1, 1, {1, 0}, {0, 0});
  EXPECT_TRUE(c.passed);
  for (const auto& s : c.sub_checks) EXPECT_TRUE(s.passed) << s.name;
}

TEST(Products, F2TimesF2BothTrivial) {
  EXPECT_TRUE(check_product_factorization(gf(2), gf(2), 2, 1, 1, {0, 0}, {0, 0}).passed);
}

TEST(Jacobson, Amplification) {
  for (const auto& spec : {zmod(4), trunc(gf_spec(2), 2), zmod(9)}) {
    const auto c = check_jacobson_amplification(spec, 2, 1);
    EXPECT_TRUE(c.passed) << display_string(spec);
    for (const auto& s : c.sub_checks) EXPECT_TRUE(s.passed) << display_string(spec) << " " << s.name;
  }
}

TEST(Jacobson, TrivialRadicalThrows) {
  EXPECT_THROW(check_jacobson_amplification(gf(3), 2), ArgumentError);
}

TEST(Semisimple, WitnessReachesHalf) {
  for (const auto& spec : {gf(2), gf(5), mat(2, gf_spec(2)), prod({gf(2), gf(3)}), prod({gf(3), gf(2, 2)})}) {
    EXPECT_TRUE(check_semisimple_lower(spec, 2).passed) << display_string(spec);
  }
  EXPECT_THROW(check_semisimple_lower(zmod(4), 2), ArgumentError);
}

TEST(UnitIndependence, Rings) {
  for (const auto& spec : {gf(2, 2), gf(5), zmod(4), mat(2, gf_spec(2))}) {
    EXPECT_TRUE(check_unit_independence(spec, 2).passed) << display_string(spec);
  }
}

TEST(IncidenceCount, ClosedFormsAndBounds) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    for (std::size_t d : {2u, 3u}) {
      const auto c = check_incidence_count(gf_q(q), d);
      EXPECT_TRUE(c.passed);
      EXPECT_EQ(c.observed, std::pow(q, 2 * d - 1) - std::pow(q, d - 1));
    }
  }
  EXPECT_TRUE(check_incidence_count(mat(2, gf_spec(2)), 2).passed);
  EXPECT_TRUE(check_incidence_count(zmod(6), 2).passed);
}

TEST(Oracle, SolverAgreementAndNu) {
  for (const auto& spec : {gf(7), zmod(8), prod({gf(2), gf(3)})}) {
    EXPECT_TRUE(check_solver_agreement(spec, 2).passed) << display_string(spec);
    EXPECT_TRUE(check_nu_oracle(spec, 2).passed) << display_string(spec);
  }
}

TEST(Nakayama, Divides) {
  EXPECT_TRUE(check_nakayama(zmod(25)).passed);
  EXPECT_TRUE(check_nakayama(trunc(gf_spec(3), 3)).passed);
  EXPECT_THROW(check_nakayama(gf(3)), ArgumentError);
}

TEST(OddSubsets, Counts) {
  EXPECT_EQ(odd_subset_count(1), 1u);
  EXPECT_EQ(odd_subset_count(3), 4u);
  EXPECT_EQ(odd_subset_count(5), 16u);
  EXPECT_THROW(odd_subset_count(0), ArgumentError);
  EXPECT_TRUE(check_odd_subsets(12).passed);
}

TEST(Edot, F5NoFailures) {
  const auto r = edot_experiment(gf(5), 2, 1, 200, 42);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_GT(double(r.set_size), r.threshold);
  EXPECT_FALSE(r.vacuous);
  EXPECT_TRUE(check_edot(r).passed);
}

TEST(Edot, F7ClosedFormThreshold) {
  const auto r = edot_experiment(gf(7), 2, 1, 200, 42);
  EXPECT_EQ(r.failures, 0u);
  ASSERT_TRUE(r.corollary_threshold);
  const double q = 7, d = 2;
  EXPECT_NEAR(*r.corollary_threshold, 2 * std::sqrt(2.0) / (1 - std::pow(q, -d)) * std::pow(q, (d + 1) / 2), 1e-9);
  EXPECT_TRUE(r.corollary_vacuous);
  ASSERT_TRUE(r.minimal_working_size);
  EXPECT_LE(*r.minimal_working_size, r.set_size);
}

TEST(Edot, ThresholdFormula) {
  const auto r = edot_experiment(zmod(9), 2, 1, 20, 1);
  const double m = 9;
  EXPECT_NEAR(r.threshold, 2 * r.measured_salem * std::sqrt(m) * std::pow(m, 4) / double(r.incidences), 1e-9);
  EXPECT_EQ(r.failures, 0u);
}

TEST(Edot, IdealObstruction) {
  const auto c = check_ideal_obstruction(zmod(4), 2);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.observed, 0.0);
}

TEST(Graph, F3Plane) {
  const auto g = graph_analysis(3, 2);
  EXPECT_EQ(g.vertices, 8u);
  ASSERT_TRUE(g.regular_degree);
  EXPECT_EQ(*g.regular_degree, 3u);
  EXPECT_TRUE(g.connected);
  EXPECT_GE(g.laplacian_gap, 3 - std::sqrt(6.0) - 1e-6);
  // Oracle: dense Laplacian of y1 x1 + y2 x2 = 1 over Z/3 on nonzero vectors.
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(8, 8);
  for (int x = 1; x < 9; ++x) {
    for (int y = 1; y < 9; ++y) {
      if (((x % 3) * (y % 3) + (x / 3) * (y / 3)) % 3 == 1) L(x - 1, y - 1) -= 1;
    }
  }
  for (int i = 0; i < 8; ++i) L(i, i) -= L.row(i).sum();
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(L).eigenvalues();
  double gap = 0;
  for (int i = 0; i < 8; ++i) {
    if (ev(i) > 1e-9) {
      gap = ev(i);
      break;
    }
  }
  EXPECT_NEAR(g.laplacian_gap, gap, 1e-9);
  EXPECT_TRUE(check_graph(g).passed);
}

TEST(Graph, F2PlaneSkipsConnectivity) {
  const auto g = graph_analysis(2, 2);
  EXPECT_FALSE(g.connectivity_asserted);
  EXPECT_TRUE(check_graph(g).passed);
}

TEST(Graph, F2Cube) {
  const auto g = graph_analysis(2, 3);
  EXPECT_EQ(g.vertices, 7u);
  EXPECT_EQ(g.regular_degree.value_or(0), 4u);
  EXPECT_TRUE(g.connected);
  EXPECT_EQ(g.big_component_size, 7u);
  EXPECT_TRUE(check_graph(g).passed);
}

TEST(Graph, Refusals) {
  EXPECT_THROW(graph_analysis(6, 2), ArgumentError);
  EXPECT_THROW(graph_analysis(9, 4), ScaleError);
}

TEST(Scan, FieldsStayBelowSqrt2) {
  std::vector<RingSpec> family;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) family.push_back(gf_q(q));
  for (const auto& row : scan_salem(family, 2)) {
    ASSERT_TRUE(row.salem) << row.spec;
    EXPECT_LE(*row.salem, std::sqrt(2.0) + 1e-6) << row.spec;
  }
}

TEST(Scan, LocalRingsAboveWitness) {
  const auto rows = scan_salem({zmod(4), zmod(8), zmod(9), trunc(gf_spec(2), 2)}, 2);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    ASSERT_TRUE(row.salem && row.witness_lower) << row.spec;
    EXPECT_GE(*row.salem, *row.witness_lower - 1e-9) << row.spec;
    EXPECT_GT(row.radical_size, 1u);
  }
  EXPECT_LE(rows.front().size, rows.back().size);
}

TEST(Scan, Mat2F2AtLeastOne) {
  const auto rows = scan_salem({mat(2, gf_spec(2))}, 2);
  EXPECT_GE(rows[0].salem.value_or(0), 1.0);
  EXPECT_EQ(rows[0].quotient_shape, "M2(F2)");
}

TEST(Scan, ErrorsStayInRow) {
  const auto rows = scan_salem({zmod(300), gf(2)}, 3);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].salem.has_value());
  EXPECT_FALSE(rows[1].error.empty());
}

TEST(Separation, GoldenFamilyAboveSqrt2) {
  for (const auto& row : scan_salem(separation_family(), 2)) {
    EXPECT_GT(row.salem.value_or(0), std::sqrt(2.0) + 1e-6) << row.spec;
  }
}

TEST(Suites, EverySuitePasses) {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    for (const auto& c : run_suite(name)) EXPECT_TRUE(c.passed) << name << ": " << c.id << " " << c.instance;
  }
  EXPECT_THROW(run_suite("nope"), ArgumentError);
}

TEST(RingChecks, ApplicableChecksPass) {
  for (const auto& spec : {gf(2, 2), zmod(9), mat(2, gf_spec(2)), zmod(6), prod({gf(2), gf(3)})}) {
    for (const auto& c : run_ring_checks(spec, 2)) EXPECT_TRUE(c.passed) << c.id << " " << c.instance;
  }
}

TEST(Settle, Directions) {
  TheoremCheck c;
  c.direction = Direction::at_most;
  c.claimed_bound = 1.0;
  c.observed = 1.0 + 5e-7;
  settle(c);
  EXPECT_TRUE(c.passed);
  c.observed = 1.0 + 2e-6;
  settle(c);
  EXPECT_FALSE(c.passed);
  c.direction = Direction::at_least;
  settle(c);
  EXPECT_TRUE(c.passed);
  c.sub_checks.push_back({"x", 0, 0, false});
  settle(c);
  EXPECT_FALSE(c.passed);
}
