#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "finring/error.hpp"
#include "finring/ring.hpp"
#include "finring/ring_spec.hpp"

using namespace finring;

namespace {

std::vector<RingSpec> test_rings() {
  return {zmod(2),       zmod(4),       zmod(6),       zmod(8),
          zmod(9),       gf(2),         gf(3),         gf(2, 2),
          gf(3, 2),      gf(2, 3),      gf(5),         mat(1, gf_spec(3)),
          mat(2, gf_spec(2)), trunc(gf_spec(2), 2), trunc(gf_spec(3), 2), trunc(gf_spec(2), 3),
          prod({gf(2), gf(3)}), prod({gf(2), gf(2)}), prod({zmod(4), gf(3)}), prod({mat(2, gf_spec(2)), gf(2)})};
}

std::vector<std::string> labels_of(const RingTable& r, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  for (Elem x : xs) out.push_back(r.label(x));
  return out;
}

}  // namespace

TEST(BuildRing, Zmod4HasOddUnits) {
  const auto r = build_ring(zmod(4));
  EXPECT_EQ(r->size(), 4u);
  EXPECT_EQ(labels_of(*r, r->units()), (std::vector<std::string>{"1", "3"}));
}

TEST(BuildRing, Mat2F2HasSixUnits) {
  const auto r = build_ring(mat(2, gf_spec(2)));
  EXPECT_EQ(r->size(), 16u);
  EXPECT_EQ(r->units().size(), 6u);
}

TEST(BuildRing, Gf9IsAField) {
  const auto r = build_ring(gf(3, 2));
  EXPECT_EQ(r->size(), 9u);
  EXPECT_EQ(r->units().size(), 8u);
  EXPECT_TRUE(r->commutative());
}

TEST(BuildRing, Rejections) {
  EXPECT_THROW(build_ring(zmod(1)), ArgumentError);
  GfSpec reducible{2, 2, {1, 0, 1}};  // x^2 + 1 = (x + 1)^2 over F2
  EXPECT_THROW(build_ring(RingSpec{reducible}), ConstructionError);
  EXPECT_THROW(build_ring(zmod(5000)), ScaleError);
}

TEST(BuildRing, SizeMatchesSpec) {
  for (const auto& spec : test_rings()) {
    EXPECT_EQ(build_ring(spec)->size(), ring_size(spec)) << display_string(spec);
  }
}

TEST(BuildRing, AxiomsHold) {
  std::mt19937_64 rng(7);
  for (const auto& spec : test_rings()) {
    const auto r = build_ring(spec);
    const Elem m = Elem(r->size());
    std::vector<Elem> sample(m);
    for (Elem i = 0; i < m; ++i) sample[i] = i;
    if (m > 16) {
      std::shuffle(sample.begin(), sample.end(), rng);
      sample.resize(16);
    }
    for (Elem a : sample) {
      EXPECT_EQ(r->add(a, r->neg(a)), 0u);
      EXPECT_EQ(r->mul(r->one(), a), a);
      EXPECT_EQ(r->mul(a, r->one()), a);
      for (Elem b : sample) {
        EXPECT_EQ(r->add(a, b), r->add(b, a));
        for (Elem c : sample) {
          ASSERT_EQ(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c))) << display_string(spec);
          ASSERT_EQ(r->mul(a, r->add(b, c)), r->add(r->mul(a, b), r->mul(a, c)));
          ASSERT_EQ(r->mul(r->add(a, b), c), r->add(r->mul(a, c), r->mul(b, c)));
        }
      }
    }
    for (Elem u : r->units()) {
      EXPECT_EQ(r->mul(u, r->unit_inverse(u)), r->one());
      EXPECT_EQ(r->mul(r->unit_inverse(u), u), r->one());
    }
  }
}

TEST(BuildRing, MatrixUnitDensity) {
  for (const auto& spec : {gf(2), mat(2, gf_spec(2)), mat(2, gf_spec(3)), mat(3, gf_spec(2)), prod({gf(2), gf(2)})}) {
    const auto r = build_ring(spec);
    EXPECT_GE(4 * r->units().size(), r->size()) << display_string(spec);
  }
  // The quarter bound does not extend to products with more factors.
  EXPECT_EQ(build_ring(prod({mat(2, gf_spec(2)), gf(2)}))->units().size(), 6u);
  EXPECT_EQ(build_ring(prod({gf(2), gf(2), gf(2)}))->units().size(), 1u);
}

TEST(BuildRing, ProductUnitsMultiply) {
  const auto a = build_ring(zmod(4)), b = build_ring(mat(2, gf_spec(2)));
  const auto p = build_ring(prod({zmod(4), mat(2, gf_spec(2))}));
  EXPECT_EQ(p->units().size(), a->units().size() * b->units().size());
}

TEST(Radical, Zmod4MatchesBruteForce) {
  // 1 + r s is a unit mod 4 for every r, by plain integers.
  std::vector<std::string> oracle;
  for (int s = 0; s < 4; ++s) {
    bool all = true;
    for (int r = 0; r < 4; ++r) all = all && ((1 + r * s) % 4) % 2 == 1;
    if (all) oracle.push_back(std::to_string(s));
  }
  const auto r = build_ring(zmod(4));
  EXPECT_EQ(labels_of(*r, jacobson_radical(r).members), oracle);
  EXPECT_EQ(oracle, (std::vector<std::string>{"0", "2"}));
}

TEST(Radical, Mat2F2IsTrivial) {
  const auto r = build_ring(mat(2, gf_spec(2)));
  EXPECT_EQ(jacobson_radical(r).size(), 1u);
}

TEST(Radical, TruncF2MatchesBruteForce) {
  // F2[e]/(e^2) as pairs (a, b) = a + b e; unit iff a = 1.
  auto mul = [](int x, int y) {
    const int a = x & 1, b = x >> 1, c = y & 1, d = y >> 1;
    return ((a * c) & 1) | (((a * d + b * c) & 1) << 1);
  };
  std::vector<int> oracle;
  for (int s = 0; s < 4; ++s) {
    bool all = true;
    for (int r = 0; r < 4; ++r) all = all && ((mul(r, s) ^ 1) & 1) == 1;
    if (all) oracle.push_back(s);
  }
  ASSERT_EQ(oracle, (std::vector<int>{0, 2}));
  const auto r = build_ring(trunc(gf_spec(2), 2));
  const auto J = jacobson_radical(r);
  ASSERT_EQ(J.size(), 2u);
  EXPECT_EQ(r->label(J.members[1]), "e");
}

TEST(Radical, QuotientIsSemisimple) {
  for (const auto& spec : test_rings()) {
    const auto r = build_ring(spec);
    const auto J = jacobson_radical(r);
    if (J.size() == r->size()) continue;
    const auto q = quotient_ring(J);
    EXPECT_EQ(jacobson_radical(q.target).size(), 1u) << display_string(spec);
  }
}

TEST(Radical, ProductIsComponentwise) {
  const auto a = build_ring(zmod(4)), b = build_ring(trunc(gf_spec(3), 2));
  const auto p = build_ring(prod({zmod(4), trunc(gf_spec(3), 2)}));
  const auto Ja = jacobson_radical(a), Jb = jacobson_radical(b), Jp = jacobson_radical(p);
  ASSERT_EQ(Jp.size(), Ja.size() * Jb.size());
  for (Elem x : Jp.members) {
    const auto parts = p->product_parts(x);
    EXPECT_TRUE(Ja.contains(parts[0]));
    EXPECT_TRUE(Jb.contains(parts[1]));
  }
}

TEST(Radical, SymmetricUnitCondition) {
  for (const auto& spec : test_rings()) {
    const auto r = build_ring(spec);
    for (Elem s : jacobson_radical(r).members) {
      for (Elem x = 0; x < r->size(); ++x) {
        ASSERT_TRUE(r->is_unit(r->add(r->one(), r->mul(s, x))));
      }
    }
  }
}

TEST(Radical, NakayamaDivisibility) {
  for (const auto& spec : {zmod(4), zmod(9), zmod(25), zmod(8), trunc(gf_spec(2), 2),
                           trunc(gf_spec(3), 2), trunc(gf_spec(2, 2), 2)}) {
    const auto r = build_ring(spec);
    const auto J = jacobson_radical(r);
    const auto q = quotient_ring(J);
    EXPECT_EQ(J.size() % q.target->size(), 0u) << display_string(spec);
  }
}

TEST(Quotient, Zmod4ByRadicalIsF2) {
  const auto r = build_ring(zmod(4));
  const auto q = quotient_ring(jacobson_radical(r));
  ASSERT_EQ(q.target->size(), 2u);
  EXPECT_EQ(q.target->units().size(), 1u);
  const Elem one = q.target->one();
  EXPECT_EQ(q.target->add(one, one), 0u);
}

TEST(Quotient, TruncF3ByRadicalMatchesF3) {
  const auto r = build_ring(trunc(gf_spec(3), 2));
  const auto q = quotient_ring(jacobson_radical(r));
  ASSERT_EQ(q.target->size(), 3u);
  // Compare with Z/3 through the image of 1.
  const Elem one = q.target->one();
  std::vector<Elem> k = {0, one, q.target->add(one, one)};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      EXPECT_EQ(q.target->mul(k[a], k[b]), k[(a * b) % 3]);
      EXPECT_EQ(q.target->add(k[a], k[b]), k[(a + b) % 3]);
    }
  }
}

TEST(Quotient, ProjectionIsHomomorphism) {
  for (const auto& spec : {zmod(8), zmod(9), trunc(gf_spec(2), 3), prod({zmod(4), gf(3)})}) {
    const auto r = build_ring(spec);
    const auto q = quotient_ring(jacobson_radical(r));
    EXPECT_EQ(q.target->size() * jacobson_radical(r).size(), r->size());
    for (Elem a = 0; a < r->size(); ++a) {
      for (Elem b = 0; b < r->size(); ++b) {
        ASSERT_EQ(q.projection[r->mul(a, b)], q.target->mul(q.projection[a], q.projection[b]));
        ASSERT_EQ(q.projection[r->add(a, b)], q.target->add(q.projection[a], q.projection[b]));
      }
    }
  }
}

TEST(Quotient, ZeroIdealGivesCopy) {
  const auto r = build_ring(zmod(4));
  const Ideal zero{r, {0}, Side::two_sided};
  const auto q = quotient_ring(zero);
  ASSERT_EQ(q.target->size(), 4u);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      EXPECT_EQ(q.projection[r->mul(a, b)], q.target->mul(q.projection[a], q.projection[b]));
    }
  }
}

TEST(Quotient, RejectsBadIdeals) {
  const auto r = build_ring(zmod(4));
  EXPECT_THROW(quotient_ring(Ideal{r, {0, 1, 2, 3}, Side::two_sided}), ArgumentError);
  const auto m = build_ring(mat(2, gf_spec(2)));
  for (const auto& I : principal_left_ideals(m)) {
    if (I.size() == 4) {
      EXPECT_THROW(quotient_ring(Ideal{m, I.members, Side::two_sided}), ArgumentError);
      break;
    }
  }
}

TEST(Opposite, CommutativeIsIdentity) {
  const auto r = build_ring(zmod(6));
  const auto phi = opposite_iso(*r);
  ASSERT_TRUE(phi);
  for (Elem a = 0; a < 6; ++a) EXPECT_EQ((*phi)[a], a);
}

TEST(Opposite, MatrixTranspose) {
  const auto r = build_ring(mat(2, gf_spec(2)));
  const auto phi = opposite_iso(*r);
  ASSERT_TRUE(phi);
  for (Elem a = 0; a < 16; ++a) {
    const auto e = r->matrix_entries(a), f = r->matrix_entries((*phi)[a]);
    EXPECT_EQ(e[1], f[2]);
    EXPECT_EQ(e[2], f[1]);
    EXPECT_EQ((*phi)[(*phi)[a]], a);
    for (Elem b = 0; b < 16; ++b) EXPECT_EQ((*phi)[r->mul(a, b)], r->mul((*phi)[b], (*phi)[a]));
  }
}

TEST(PrincipalIdeals, FieldHasOnlyTrivialIdeals) {
  std::set<std::size_t> sizes;
  for (const auto& I : principal_left_ideals(build_ring(gf(5)))) sizes.insert(I.size());
  EXPECT_EQ(sizes, (std::set<std::size_t>{1, 5}));
}

TEST(PrincipalIdeals, Zmod4Sizes) {
  // Closures of R x by plain integers.
  std::set<std::set<int>> oracle;
  for (int x = 0; x < 4; ++x) {
    std::set<int> ideal;
    for (int r = 0; r < 4; ++r) ideal.insert(r * x % 4);
    oracle.insert(ideal);
  }
  std::set<std::size_t> sizes, expected;
  for (const auto& I : oracle) expected.insert(I.size());
  for (const auto& I : principal_left_ideals(build_ring(zmod(4)))) sizes.insert(I.size());
  EXPECT_EQ(sizes, expected);
  EXPECT_EQ(sizes, (std::set<std::size_t>{1, 2, 4}));
}

TEST(PrincipalIdeals, Mat2F2HasSizeFour) {
  const auto r = build_ring(mat(2, gf_spec(2)));
  bool found = false;
  for (const auto& I : principal_left_ideals(r)) {
    EXPECT_TRUE(is_ideal(*r, I.members, Side::left));
    found = found || I.size() == 4;
  }
  EXPECT_TRUE(found);
}

TEST(Spec, CanonicalAndDisplayStrings) {
  EXPECT_EQ(display_string(gf(3, 2)), "gf(9)");
  EXPECT_EQ(canonical_string(gf(3, 2)), "gf(3,2,[2,2,1])");
  EXPECT_EQ(quotient_shape(zmod(6)), "F2xF3");
  EXPECT_EQ(quotient_shape(mat(2, gf_spec(2))), "M2(F2)");
  EXPECT_TRUE(is_field(zmod(7)));
  EXPECT_FALSE(is_field(zmod(4)));
  EXPECT_FALSE(prime_power(6));
  EXPECT_EQ(prime_power(9), (std::pair<std::uint32_t, std::uint32_t>{3, 2}));
}
