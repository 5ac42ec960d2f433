#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hasse/error.hpp"
#include "hasse/families.hpp"
#include "hasse/group.hpp"
#include "hasse/isomorphism.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace hasse;

namespace {

using Table = std::vector<std::vector<Element>>;

// Random loop (Latin square whose row and column 0 are the identity) by
// randomised backtracking over the cells in row-major order.
class LoopGenerator {
 public:
  explicit LoopGenerator(std::uint64_t seed) : rng_(seed) {}

  Table next(std::size_t n) {
    t_.assign(n, std::vector<Element>(n, kNone));
    for (Element i = 0; i < n; ++i) t_[0][i] = t_[i][0] = i;
    fill(1, 1);
    return t_;
  }

 private:
  static constexpr Element kNone = ~Element{0};

  bool fill(std::size_t r, std::size_t c) {
    const std::size_t n = t_.size();
    if (r == n) return true;
    if (c == n) return fill(r + 1, 1);
    std::vector<Element> symbols(n);
    for (Element s = 0; s < n; ++s) symbols[s] = s;
    std::shuffle(symbols.begin(), symbols.end(), rng_);
    for (Element s : symbols) {
      bool clash = false;
      for (std::size_t k = 0; k < n && !clash; ++k) clash = t_[r][k] == s || t_[k][c] == s;
      if (clash) continue;
      t_[r][c] = s;
      if (fill(r, c + 1)) return true;
      t_[r][c] = kNone;
    }
    return false;
  }

  std::mt19937_64 rng_;
  Table t_;
};

}  // namespace

TEST(Validation, GreedyAssociativityTestMatchesExhaustiveCheck) {
  LoopGenerator gen(1234);
  int groups = 0, loops = 0;
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t n = 2 + trial % 7;
    Table t = gen.next(n);
    bool expected = oracle::associative(t);
    bool accepted = true;
    try {
      FiniteGroup::from_cayley_table(t, "loop");
    } catch (const Error& e) {
      accepted = false;
      EXPECT_TRUE(e.kind() == ErrorKind::NotAssociative || e.kind() == ErrorKind::NoInverse) << e.what();
    }
    EXPECT_EQ(accepted, expected) << "trial " << trial << " n=" << n;
    (expected ? groups : loops)++;
  }
  EXPECT_GT(groups, 50);
  EXPECT_GT(loops, 50);
}

TEST(Validation, RelabelledGroupsAreAccepted) {
  std::mt19937_64 rng(77);
  for (const auto& e : testing_support::catalog_64()) {
    if (e.group.order() > 32) continue;
    auto copy = testing_support::relabel(e.group, rng);
    EXPECT_NO_THROW(copy.validate());
    EXPECT_EQ(copy.mul(0, 5 % copy.order()), 5 % copy.order());
  }
}

TEST(Validation, SwappingTwoEntriesBreaksAGroup) {
  std::mt19937_64 rng(3);
  for (const auto& e : testing_support::catalog_64()) {
    const auto& g = e.group;
    if (g.order() < 3 || g.order() > 24) continue;
    auto t = oracle::table_of(g);
    auto r = 1 + rng() % (g.order() - 1);
    auto c1 = 1 + rng() % (g.order() - 1), c2 = 1 + rng() % (g.order() - 1);
    if (c1 == c2) continue;
    std::swap(t[r][c1], t[r][c2]);
    EXPECT_THROW(FiniteGroup::from_cayley_table(t, "broken"), Error) << e.name;
  }
}

TEST(ElementSetModel, OperationsMatchStdSet) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 200;
    ElementSet a(n), b(n);
    std::set<std::size_t> ma, mb;
    for (int k = 0; k < 40; ++k) {
      auto x = rng() % n, y = rng() % n;
      a.insert(x);
      ma.insert(x);
      EXPECT_EQ(b.add(y), mb.insert(y).second);
    }
    EXPECT_EQ(a.count(), ma.size());
    EXPECT_EQ(a.to_vector(), std::vector<std::size_t>(ma.begin(), ma.end()));
    EXPECT_EQ(a.is_subset_of(b), std::includes(mb.begin(), mb.end(), ma.begin(), ma.end()));

    ElementSet u = a, i = a, d = a;
    u |= b;
    i &= b;
    d -= b;
    std::set<std::size_t> mu = ma, mi, md;
    mu.insert(mb.begin(), mb.end());
    for (auto x : ma) (mb.count(x) ? mi : md).insert(x);
    EXPECT_EQ(u.to_vector(), std::vector<std::size_t>(mu.begin(), mu.end()));
    EXPECT_EQ(i.to_vector(), std::vector<std::size_t>(mi.begin(), mi.end()));
    EXPECT_EQ(d.to_vector(), std::vector<std::size_t>(md.begin(), md.end()));

    // Ordering: the set holding the lowest differing element sorts first.
    if (!(a == b)) {
      std::size_t low = 0;
      while (a.contains(low) == b.contains(low)) ++low;
      EXPECT_EQ(a < b, a.contains(low));
      EXPECT_NE(a < b, b < a);
    }
    if (!ma.empty()) {
      auto x = *ma.begin();
      a.erase(x);
      EXPECT_FALSE(a.contains(x));
    }
  }
}

TEST(Isomorphism, RandomProductsAgreeWithOrderOfFactors) {
  // G x H and H x G are isomorphic; G x H is never isomorphic to a group of
  // different order statistics.
  std::mt19937_64 rng(8);
  std::vector<FiniteGroup> small;
  for (const auto& e : testing_support::catalog_64())
    if (e.group.order() >= 2 && e.group.order() <= 8) small.push_back(e.group);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& a = small[rng() % small.size()];
    const auto& b = small[rng() % small.size()];
    auto ab = direct_product(a, b);
    auto ba = direct_product(b, a);
    auto iso = is_isomorphic(ab, ba);
    ASSERT_TRUE(iso) << ab.name();
    EXPECT_TRUE(is_isomorphism(ab, ba, iso->map));
  }
}
