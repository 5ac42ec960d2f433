#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hasse/families.hpp"
#include "hasse/family_tag.hpp"
#include "hasse/isomorphism.hpp"
#include "hasse/lattice.hpp"

namespace hasse {

/// True iff some vertex has degree D with 2(D + 1) > |G|. Throws TrivialGroup.
bool has_large_degree_vertex(const SubgroupLattice& lattice);

struct Recognition {
  std::set<FamilyTag> tags;
  /// Tags whose isomorphism test could not run under the configured caps.
  std::vector<FamilyTag> undecided;

  bool has(FamilyTag tag) const { return tags.count(tag) != 0; }
  bool has_theorem_a(TheoremAType lo, TheoremAType hi) const;
  bool undecided_theorem_a(TheoremAType lo, TheoremAType hi) const;
};

/// Family recognizers. Iso-based types are compared against representatives
/// built on demand and cached, so one instance should serve a whole run.
class Recognizer {
 public:
  explicit Recognizer(Limits limits = {}) : limits_(limits) {}

  Recognition recognize(const SubgroupLattice& lattice);

  /// Individual predicates; `lattice` must belong to the group.
  static bool small_non_cyclic(const FiniteGroup& g);
  static bool elementary_abelian_2(const FiniteGroup& g);
  static bool c2s_times_c4(const FiniteGroup& g);
  static bool generalized_extraspecial(const SubgroupLattice& lattice);
  static bool cpn_by_c2(const FiniteGroup& g);
  static bool generalized_dihedral(const SubgroupLattice& lattice);
  static bool exponent_3(const FiniteGroup& g);

 private:
  // (type, r, e) where r is a rank parameter and e the dimension of E.
  using Key = std::tuple<int, std::size_t, std::size_t>;
  struct Representative {
    FiniteGroup group;
    GroupInvariants invariants;
  };

  /// nullopt: undecided under the caps.
  std::optional<bool> matches(const FiniteGroup& g, const GroupInvariants& inv, Key key);
  const Representative& representative(Key key);

  Limits limits_;
  std::map<Key, Representative> cache_;
};

/// Convenience wrapper with a fresh cache.
Recognition recognize(const SubgroupLattice& lattice, const Limits& limits = {});

struct Counterexample {
  std::string group;
  std::string detail;
};

struct VerificationReport {
  std::string theorem;
  std::size_t max_order = 0;
  std::size_t groups_checked = 0;
  std::vector<Counterexample> counterexamples;
  bool passed = true;
};

std::string to_json(const VerificationReport& report);

/// Solvable groups with a vertex of degree > |G|/2 - 1 carry a tag of families
/// 1..7, family 2 restricted to types I..IX. One direction only.
VerificationReport verify_large_degree(const std::vector<CatalogEntry>& catalog,
                                       std::size_t max_order, const Limits& limits = {});
/// delta(G) > |G|/2 - 1 iff G has a type I..X tag. Includes non-solvable groups.
VerificationReport verify_prime_order_count(const std::vector<CatalogEntry>& catalog,
                                            std::size_t max_order, const Limits& limits = {});
/// i2(G) > |G|/2 - 1 iff G has a type I..IV tag.
VerificationReport verify_involution_count(const std::vector<CatalogEntry>& catalog,
                                           std::size_t max_order, const Limits& limits = {});
/// Solvable G: a vertex of degree >= 3|G|/4 iff G is an elementary abelian 2-group.
VerificationReport verify_three_quarter_degree(const std::vector<CatalogEntry>& catalog,
                                               std::size_t max_order, const Limits& limits = {});
/// Solvable G: a vertex of degree exactly |G|/2 iff G is S3 x D8 x E, elementary
/// abelian 2, C2^(s-1) x C4 or generalized extraspecial.
VerificationReport verify_half_degree(const std::vector<CatalogEntry>& catalog,
                                      std::size_t max_order, const Limits& limits = {});

}  // namespace hasse
