#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hasse/classify.hpp"
#include "hasse/error.hpp"
#include "hasse/families.hpp"
#include "hasse/lattice.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace hasse;
using T = TheoremAType;

namespace {

Recognition tags_of(const FiniteGroup& g, const Limits& limits = {}) {
  return recognize(all_subgroups(g, limits.lattice), limits);
}

const FamilyTag kF1{Family::F1Small};
const FamilyTag kF3{Family::F3ElemAb2};
const FamilyTag kF4{Family::F4C2sC4};
const FamilyTag kF5{Family::F5GenExtraspecial};
const FamilyTag kF6{Family::F6CpnC2};
const FamilyTag kF7{Family::F7D12};
const FamilyTag kWall{Family::WallIToIV};
FamilyTag A(T t) { return FamilyTag::theorem_a(t); }

bool has_counterexample(const VerificationReport& r, const std::string& name) {
  return std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                     [&](const Counterexample& c) { return c.group == name; });
}

}  // namespace

TEST(LargeDegree, Examples) {
  EXPECT_TRUE(has_large_degree_vertex(all_subgroups(elementary_abelian(2, 4))));
  EXPECT_TRUE(has_large_degree_vertex(all_subgroups(dihedral(6))));
  EXPECT_FALSE(has_large_degree_vertex(all_subgroups(cyclic(12))));
  EXPECT_EQ(max_degree(all_subgroups(cyclic(12))).second, 3u);
  try {
    has_large_degree_vertex(all_subgroups(cyclic(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TrivialGroup);
  }
}

TEST(LargeDegree, CyclicFiveToElevenMiss) {
  for (std::size_t n = 5; n <= 11; ++n) EXPECT_FALSE(has_large_degree_vertex(all_subgroups(cyclic(n)))) << n;
  for (std::size_t n = 2; n <= 4; ++n) EXPECT_TRUE(has_large_degree_vertex(all_subgroups(cyclic(n)))) << n;
}

TEST(Recognize, ElementaryAbelian) {
  for (std::size_t k = 1; k <= 6; ++k) {
    auto r = tags_of(elementary_abelian(2, k));
    EXPECT_TRUE(r.has(kF3));
    EXPECT_TRUE(r.has(A(T::I)));
    EXPECT_EQ(r.has(kF1), (std::size_t{1} << k) <= 11);
    if (k <= 2) {
      EXPECT_FALSE(r.has(A(T::II)));
      EXPECT_FALSE(r.has(A(T::III)));
      EXPECT_FALSE(r.has(A(T::IV)));
    }
    EXPECT_TRUE(r.undecided.empty());
  }
}

TEST(Recognize, NamedExamples) {
  EXPECT_TRUE(tags_of(heisenberg(3)).has(A(T::VI)));
  auto h2 = tags_of(wall_H(2));
  EXPECT_TRUE(h2.has(kF5));
  EXPECT_TRUE(h2.has(A(T::III)));
  EXPECT_TRUE(h2.has(kWall));

  auto d8 = tags_of(dihedral(4));
  for (auto t : {kF1, A(T::I), A(T::III), kF5, kWall}) EXPECT_TRUE(d8.has(t)) << to_string(t);

  auto d12 = tags_of(dihedral(6));
  EXPECT_TRUE(d12.has(kF7));
  EXPECT_TRUE(d12.has(A(T::I)));

  EXPECT_TRUE(tags_of(symmetric(4)).has(A(T::IX)));
  EXPECT_TRUE(tags_of(alternating(5)).has(A(T::X)));
  EXPECT_TRUE(tags_of(direct_product(symmetric(3), symmetric(3))).has(A(T::VIII)));
  EXPECT_TRUE(tags_of(direct_product(symmetric(3), dihedral(4))).has(A(T::VII)));
  EXPECT_TRUE(tags_of(wall_T(2)).has(A(T::V)));
  EXPECT_TRUE(tags_of(direct_product(dihedral(4), dihedral(4))).has(A(T::II)));
  EXPECT_TRUE(tags_of(wall_S(2)).has(A(T::IV)));
  EXPECT_FALSE(tags_of(wall_S(2)).has(kF5));

  auto c12 = tags_of(cyclic(12));
  EXPECT_TRUE(c12.tags.empty());

  EXPECT_TRUE(tags_of(abelian({2, 4})).has(kF4));
  EXPECT_TRUE(tags_of(cyclic(4)).has(kF4));
  EXPECT_FALSE(tags_of(abelian({4, 4})).has(kF4));
  EXPECT_FALSE(tags_of(cyclic(4)).has(A(T::I)));
}

TEST(Recognize, FamilySixAcceptsAnyAction) {
  EXPECT_TRUE(tags_of(symmetric(3)).has(kF6));
  EXPECT_TRUE(tags_of(abelian({2, 3, 3})).has(kF6));
  EXPECT_TRUE(tags_of(cyclic(10)).has(kF6));
  EXPECT_FALSE(tags_of(cyclic(18)).has(kF6));
  EXPECT_FALSE(tags_of(cyclic(12)).has(kF6));
  EXPECT_FALSE(tags_of(cyclic(2)).has(kF6));
}

TEST(Recognize, UndecidedWhenIsomorphismCapIsTooSmall) {
  Limits tight;
  tight.isomorphism = 16;
  auto r = tags_of(symmetric(4), tight);
  EXPECT_FALSE(r.has(A(T::IX)));
  EXPECT_NE(std::find(r.undecided.begin(), r.undecided.end(), A(T::IX)), r.undecided.end());

  std::vector<CatalogEntry> cat = {{"S4", symmetric(4), {}}};
  auto report = verify_prime_order_count(cat, 24, tight);
  EXPECT_FALSE(report.passed);
  ASSERT_EQ(report.counterexamples.size(), 1u);
  EXPECT_NE(report.counterexamples[0].detail.find("undecided"), std::string::npos);
}

TEST(Recognize, GeneralizedDihedralAgreesWithBruteForce) {
  for (const auto& e : testing_support::catalog_64()) {
    if (e.group.order() > 32) continue;
    auto lat = all_subgroups(e.group);
    EXPECT_EQ(Recognizer::generalized_dihedral(lat), oracle::generalized_dihedral(oracle::table_of(e.group)))
        << e.name;
  }
}

TEST(Recognize, KnownTagsAreRecovered) {
  Recognizer rec;
  auto cat = merge_catalog(catalog(128), theorem_a_extras());
  for (const auto& e : cat) {
    auto r = rec.recognize(all_subgroups(e.group));
    for (const auto& t : e.known_tags) EXPECT_TRUE(r.has(t)) << e.name << " " << to_string(t);
    EXPECT_TRUE(r.undecided.empty()) << e.name;
  }
}

TEST(Recognize, TagsAreIsomorphismInvariant) {
  std::mt19937_64 rng(5);
  Recognizer rec;
  for (const auto& e : testing_support::catalog_64()) {
    auto copy = testing_support::relabel(e.group, rng);
    EXPECT_EQ(rec.recognize(all_subgroups(e.group)).tags, rec.recognize(all_subgroups(copy)).tags) << e.name;
  }
}

TEST(Recognize, FamilyThreeImpliesLargeDegree) {
  for (const auto& e : testing_support::catalog_64()) {
    auto lat = all_subgroups(e.group);
    if (recognize(lat).has(kF3)) {
      EXPECT_TRUE(has_large_degree_vertex(lat)) << e.name;
    }
  }
}

TEST(Recognize, FamilyFourHasMaxDegreeHalfTheOrder) {
  for (std::size_t s = 1; s <= 4; ++s) {
    std::vector<std::size_t> factors(s - 1, 2);
    factors.push_back(4);
    auto g = abelian(factors);
    auto lat = all_subgroups(g);
    ASSERT_TRUE(recognize(lat).has(kF4));
    EXPECT_EQ(2 * max_degree(lat).second, g.order()) << s;
  }
}

TEST(Verify, PrimeOrderCountOnExtendedCatalog) {
  auto cat = merge_catalog(catalog(36), theorem_a_extras());
  auto r = verify_prime_order_count(cat, 60);
  EXPECT_TRUE(r.passed) << to_json(r);
  EXPECT_GT(r.groups_checked, 100u);
}

TEST(Verify, InvolutionCountOnExtendedCatalog) {
  auto cat = merge_catalog(catalog(64), theorem_a_extras());
  auto r = verify_involution_count(cat, 64);
  EXPECT_TRUE(r.passed) << to_json(r);
}

TEST(Verify, SpotValues) {
  EXPECT_EQ(delta(symmetric(4)), 13u);
  EXPECT_EQ(delta(alternating(5)), 31u);
  EXPECT_EQ(delta(cyclic(12)), 2u);
  EXPECT_EQ(involution_count(dihedral(4)), 5u);
  EXPECT_EQ(involution_count(cyclic(4)), 1u);
  EXPECT_FALSE(tags_of(cyclic(4)).has_theorem_a(T::I, T::IV));
}

TEST(Verify, LargeDegreeThroughOrderFifteen) {
  auto r = verify_large_degree(catalog(15), 15);
  EXPECT_TRUE(r.passed) << to_json(r);
  EXPECT_EQ(r.groups_checked, 27u);
}

// C2^2 : C4 contains C2^3 with index 2, so that vertex has degree 7 + 1 = 8 >
// 16/2 - 1, yet the group has only 7 involutions, Phi of order 4 and no other
// family shape. The verifier has to report it.
TEST(Verify, LargeDegreeReportsTheOrderSixteenExample) {
  auto r = verify_large_degree(catalog(16), 16);
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.counterexamples.size(), 1u);
  EXPECT_EQ(r.counterexamples[0].group, "C2^2:C4");

  const auto& g = testing_support::entry("C2^2:C4").group;
  auto lat = all_subgroups(g);
  EXPECT_EQ(max_degree(lat).second, 8u);
  EXPECT_EQ(max_degree(lat).first.order(), 8u);
  EXPECT_EQ(involution_count(g), 7u);
  EXPECT_EQ(frattini(lat).order(), 4u);
  EXPECT_TRUE(recognize(lat).tags.empty());
}

TEST(Verify, ThreeQuarterDegreeMissesOnlyC2) {
  auto r = verify_three_quarter_degree(catalog(32), 32);
  ASSERT_EQ(r.counterexamples.size(), 1u);
  EXPECT_EQ(r.counterexamples[0].group, "C2");
  EXPECT_EQ(max_degree(all_subgroups(cyclic(2))).second, 1u);
}

TEST(Verify, HalfDegreeFindings) {
  auto r = verify_half_degree(catalog(32), 32);
  EXPECT_TRUE(has_counterexample(r, "D12"));
  EXPECT_TRUE(has_counterexample(r, "C2^2:C4"));
  EXPECT_TRUE(has_counterexample(r, "S(2)"));
  auto d8 = all_subgroups(dihedral(4));
  bool half = false;
  for (std::size_t i = 0; i < d8.size(); ++i) half = half || 2 * degree(d8, i) == 8;
  EXPECT_TRUE(half);
  EXPECT_FALSE(has_counterexample(r, "D8"));
  auto s3 = all_subgroups(symmetric(3));
  for (std::size_t i = 0; i < s3.size(); ++i) EXPECT_NE(degree(s3, i), 3u);
}

TEST(Verify, ReportJson) {
  VerificationReport r;
  r.theorem = "wall";
  r.max_order = 8;
  r.groups_checked = 2;
  r.counterexamples.push_back({"X", "detail"});
  r.passed = false;
  EXPECT_EQ(to_json(r),
            "{\n  \"theorem\": \"wall\",\n  \"max_order\": 8,\n  \"groups_checked\": 2,\n"
            "  \"counterexamples\": [\n    {\n      \"group\": \"X\",\n      \"detail\": \"detail\"\n    }\n  ],\n"
            "  \"passed\": false\n}\n");
}
