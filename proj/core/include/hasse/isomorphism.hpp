#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hasse/group.hpp"

namespace hasse {

/// Witness bijection: map[a] is the image in the target of source element a.
struct Isomorphism {
  std::vector<Element> map;
};

/// Cheap isomorphism invariants used to prune the search.
struct GroupInvariants {
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  bool abelian = false;
  /// Sorted multiset of per-element signatures (order, centralizer size, square roots).
  std::vector<std::array<std::uint32_t, 3>> signatures;

  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

GroupInvariants invariants(const FiniteGroup& group);

/// Exact decision with a witness. Backtracks over images of the greedy
/// generating set of `source`, pruning by element signatures and by partial
/// homomorphism consistency. Throws GroupTooLarge above `cap`.
std::optional<Isomorphism> is_isomorphic(const FiniteGroup& source, const FiniteGroup& target,
                                         std::size_t cap = Limits{}.isomorphism);

/// Checks that `map` is a bijective homomorphism source -> target.
bool is_isomorphism(const FiniteGroup& source, const FiniteGroup& target,
                    std::span<const Element> map);

}  // namespace hasse
