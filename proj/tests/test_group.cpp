#include <gtest/gtest.h>

#include <random>

#include "hasse/error.hpp"
#include "hasse/families.hpp"
#include "hasse/group.hpp"
#include "hasse/isomorphism.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace hasse;

namespace {

using Table = std::vector<std::vector<Element>>;

ErrorKind kind_of(const Table& t) {
  try {
    FiniteGroup::from_cayley_table(t, "x");
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "table was accepted";
  return ErrorKind::InputError;
}

FiniteGroup s3_from_permutations() {
  auto t = oracle::permutation_table(3, {{1, 2, 0}, {1, 0, 2}});
  return FiniteGroup::from_cayley_table(t, "S3");
}

Subgroup subgroup_of(const FiniteGroup& g, std::vector<Element> xs) { return closure(g, xs); }

}  // namespace

TEST(CayleyTable, AcceptsC2) {
  auto g = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}, "C2");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.name(), "C2");
  EXPECT_EQ(g.mul(1, 1), 0u);
}

TEST(CayleyTable, RejectsRepeatedEntry) {
  EXPECT_EQ(kind_of({{0, 1}, {1, 1}}), ErrorKind::NotLatinSquare);
  EXPECT_EQ(kind_of({{0, 1}, {1}}), ErrorKind::NotLatinSquare);
  EXPECT_EQ(kind_of({{0, 2}, {1, 0}}), ErrorKind::NotLatinSquare);
}

TEST(CayleyTable, RejectsMissingIdentity) {
  // a * b = -a - b (mod 3) is a Latin square with no identity.
  Table t(3, std::vector<Element>(3));
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) t[a][b] = (6 - a - b) % 3;
  EXPECT_EQ(kind_of(t), ErrorKind::NoIdentity);
}

TEST(CayleyTable, RejectsNonAssociativeLoop) {
  Table loop = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  ASSERT_FALSE(oracle::associative(loop));
  EXPECT_EQ(kind_of(loop), ErrorKind::NotAssociative);
  try {
    FiniteGroup::from_cayley_table(loop, "loop");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("NotAssociative"), std::string::npos);
  }
}

TEST(CayleyTable, ValidatesPermutationTableOfS3) {
  auto g = s3_from_permutations();
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(is_abelian(g));
  EXPECT_NO_THROW(g.validate());
}

TEST(CayleyTable, MovesIdentityToZero) {
  // C3 with the identity stored as element 2.
  Table t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = FiniteGroup::from_cayley_table(t, "C3");
  for (Element x = 0; x < 3; ++x) {
    EXPECT_EQ(g.mul(0, x), x);
    EXPECT_EQ(g.mul(x, 0), x);
  }
  EXPECT_TRUE(is_isomorphic(g, cyclic(3)).has_value());
}

TEST(PermutationGroups, ClosureOrders) {
  auto s3 = from_permutation_generators(3, {permutation_from_cycles(3, {{0, 1, 2}}),
                                            permutation_from_cycles(3, {{0, 1}})});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_TRUE(is_isomorphic(s3, s3_from_permutations()).has_value());

  EXPECT_EQ(from_permutation_generators(4, {}).order(), 1u);

  auto a5 = from_permutation_generators(5, {permutation_from_cycles(5, {{0, 1, 2, 3, 4}}),
                                            permutation_from_cycles(5, {{0, 1, 2}})});
  EXPECT_EQ(a5.order(), 60u);
  auto naive = oracle::permutation_table(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
  EXPECT_EQ(naive.size(), 60u);
}

TEST(PermutationGroups, CapIsEnforced) {
  std::vector<Permutation> gens = {permutation_from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
                                   permutation_from_cycles(7, {{0, 1}})};
  try {
    from_permutation_generators(7, gens);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupTooLarge);
  }
  EXPECT_EQ(from_permutation_generators(7, gens, "S7", 5040).order(), 5040u);
}

TEST(Closure, Examples) {
  auto d8 = dihedral(4);
  EXPECT_EQ(closure(d8, std::vector<Element>{1}).order(), 4u);
  EXPECT_EQ(closure(d8, std::vector<Element>{}).order(), 1u);
  std::vector<Element> all(8);
  for (Element x = 0; x < 8; ++x) all[x] = x;
  EXPECT_EQ(closure(d8, all).order(), 8u);
}

TEST(Closure, MatchesNaiveClosureOnRandomSeeds) {
  std::mt19937_64 rng(7);
  for (const char* name : {"S4", "D8xC2", "Dic12", "A4", "C2^2:C4"}) {
    const auto& g = testing_support::entry(name).group;
    auto t = oracle::table_of(g);
    for (int trial = 0; trial < 40; ++trial) {
      ElementSet seed(g.order());
      oracle::Set naive(g.order());
      for (int k = 0; k < 1 + trial % 3; ++k) {
        auto x = static_cast<Element>(rng() % g.order());
        seed.insert(x);
        naive[x] = true;
      }
      auto expected = oracle::close(t, naive);
      auto got = closure(g, seed);
      for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(got.contains(x), expected[x]);
    }
  }
}

TEST(Elements, Orders) {
  auto c6 = cyclic(6);
  EXPECT_EQ(element_order(c6, 0), 1u);
  EXPECT_EQ(element_order(c6, 1), 6u);
  auto d8 = dihedral(4);
  for (Element x = 4; x < 8; ++x) EXPECT_EQ(element_order(d8, x), 2u);
}

TEST(Elements, DeltaExamples) {
  EXPECT_EQ(delta(elementary_abelian(2, 2)), 3u);
  EXPECT_EQ(delta(dihedral(4)), 5u);
  EXPECT_EQ(delta(symmetric(4)), 13u);
  EXPECT_GT(2 * (delta(symmetric(4)) + 1), 24u);
}

TEST(Elements, InvolutionCounts) {
  for (std::size_t k = 0; k <= 6; ++k)
    EXPECT_EQ(involution_count(elementary_abelian(2, k)), (std::size_t{1} << k) - 1);
  EXPECT_EQ(involution_count(cyclic(3)), 0u);
  EXPECT_EQ(involution_count(alternating(5)), 15u);
}

TEST(Elements, DeltaMatchesPrimeOrderSubgroupOracle) {
  for (const auto& e : testing_support::catalog_64()) {
    if (e.group.order() > 32) continue;
    auto t = oracle::table_of(e.group);
    EXPECT_EQ(delta(e.group), oracle::prime_order_subgroups(t)) << e.name;
    EXPECT_GE(delta(e.group), involution_count(e.group)) << e.name;
  }
}

TEST(Structure, CenterDerivedExponent) {
  auto d8 = dihedral(4);
  EXPECT_EQ(center(d8).order(), 2u);
  EXPECT_EQ(derived_subgroup(d8).order(), 2u);
  EXPECT_EQ(center(s3_from_permutations()).order(), 1u);
  auto c33 = abelian({3, 3});
  EXPECT_EQ(exponent(c33), 3u);
  EXPECT_TRUE(is_abelian(c33));
}

TEST(Structure, CenterMatchesDefinition) {
  for (const auto& e : testing_support::catalog_64()) {
    const auto& g = e.group;
    auto z = center(g);
    for (Element a = 0; a < g.order(); ++a) {
      bool central = true;
      for (Element x = 0; x < g.order() && central; ++x) central = g.mul(a, x) == g.mul(x, a);
      EXPECT_EQ(z.contains(a), central) << e.name;
    }
  }
}

TEST(Structure, NormalityAndQuotients) {
  auto c4 = cyclic(4);
  EXPECT_TRUE(quotient_is_elementary_abelian_2(c4, subgroup_of(c4, {2})));

  auto s3 = symmetric(3);
  Subgroup c3, c2;
  for (Element x = 1; x < 6; ++x) {
    if (element_order(s3, x) == 3) c3 = subgroup_of(s3, {x});
    if (element_order(s3, x) == 2) c2 = subgroup_of(s3, {x});
  }
  EXPECT_TRUE(is_normal(s3, c3));
  EXPECT_TRUE(quotient_is_elementary_abelian_2(s3, c3));
  EXPECT_FALSE(is_normal(s3, c2));
  try {
    quotient_is_elementary_abelian_2(s3, c2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormal);
  }
  EXPECT_THROW(quotient_group(s3, c2), Error);

  auto c9 = cyclic(9);
  EXPECT_FALSE(quotient_is_elementary_abelian_2(c9, subgroup_of(c9, {3})));
}

TEST(Structure, QuotientOrderAndElementaryTestAgree) {
  for (const auto& e : testing_support::catalog_64()) {
    const auto& g = e.group;
    if (g.order() > 32) continue;
    for (const auto& set : oracle::subgroups(oracle::table_of(g))) {
      ElementSet members(g.order());
      for (Element x = 0; x < g.order(); ++x)
        if (set[x]) members.insert(x);
      Subgroup h(members);
      if (!is_normal(g, h)) {
        EXPECT_FALSE(oracle::normal(oracle::table_of(g), set)) << e.name;
        continue;
      }
      auto q = quotient_group(g, h);
      EXPECT_EQ(q.order() * h.order(), g.order());
      EXPECT_EQ(quotient_is_elementary_abelian_2(g, h), exponent(q) <= 2) << e.name;
    }
  }
}

TEST(Structure, Solvability) {
  EXPECT_TRUE(is_solvable(symmetric(4)));
  EXPECT_FALSE(is_solvable(alternating(5)));
  EXPECT_TRUE(is_solvable(abelian({2, 3, 4})));
  auto s4 = symmetric(4);
  EXPECT_EQ(derived_subgroup(s4).order(), 12u);
  auto a4 = subgroup_as_group(s4, derived_subgroup(s4));
  EXPECT_EQ(derived_subgroup(a4).order(), 4u);
}

TEST(Structure, NormalSylow) {
  auto s3 = symmetric(3);
  auto p3 = sylow_p_elements_form_subgroup(s3, 3);
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3->order(), 3u);
  EXPECT_FALSE(sylow_p_elements_form_subgroup(s3, 2));
  auto c12 = cyclic(12);
  auto p2 = sylow_p_elements_form_subgroup(c12, 2);
  ASSERT_TRUE(p2);
  EXPECT_EQ(p2->order(), 4u);
  EXPECT_THROW(sylow_p_elements_form_subgroup(c12, 5), Error);
}

TEST(Structure, CheckedSubgroup) {
  auto d8 = dihedral(4);
  ElementSet bad(8);
  bad.insert(0);
  bad.insert(1);
  EXPECT_THROW(Subgroup::checked(d8, bad), Error);
  bad.insert(2);
  bad.insert(3);
  EXPECT_EQ(Subgroup::checked(d8, bad).order(), 4u);
}
