#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hasse/group.hpp"

namespace hasse {

/// Degrees of one vertex of the subgroup graph: `down` counts the maximal
/// subgroups of H, `up` the atoms of the interval [H, G].
struct DegreeEntry {
  std::size_t degree = 0;
  std::size_t down = 0;
  std::size_t up = 0;
};

/// All subgroups of a group with the containment order and its Hasse diagram
/// (the subgroup graph). Subgroups are sorted by order, then by lowest
/// differing element, so index 0 is trivial and the last index is the group.
class SubgroupLattice {
 public:
  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_.at(i); }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  std::optional<std::size_t> index_of(const Subgroup& sub) const;

  /// Indices j with subgroup(i) strictly contained in subgroup(j).
  const ElementSet& strict_supergroups(std::size_t i) const { return above_.at(i); }
  bool strictly_contains(std::size_t outer, std::size_t inner) const {
    return above_.at(inner).contains(outer);
  }

  /// Cover edges (i, j): subgroup i is covered by subgroup j.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_.at(i); }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_.at(i); }
  std::size_t edge_count() const noexcept { return covers_.size(); }
  bool is_normal(std::size_t i) const { return normal_.at(i); }

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t top_index() const noexcept { return subgroups_.size() - 1; }

 private:
  friend SubgroupLattice all_subgroups(const FiniteGroup&, std::size_t);
  explicit SubgroupLattice(FiniteGroup g) : group_(std::move(g)) {}

  FiniteGroup group_;
  std::vector<Subgroup> subgroups_;
  std::vector<ElementSet> above_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<bool> normal_;
};

/// Enumerates every subgroup by extending known subgroups with one cyclic
/// generator at a time. Throws GroupTooLarge above `cap`.
SubgroupLattice all_subgroups(const FiniteGroup& group, std::size_t cap = Limits{}.lattice);

std::size_t degree(const SubgroupLattice& lattice, std::size_t index);
/// Throws InvalidArgument when `sub` is not a subgroup in the lattice.
std::size_t degree(const SubgroupLattice& lattice, const Subgroup& sub);
std::vector<DegreeEntry> degree_profile(const SubgroupLattice& lattice);
/// Vertex of maximum degree; ties go to the first subgroup in lattice order.
std::pair<Subgroup, std::size_t> max_degree(const SubgroupLattice& lattice);

std::vector<Subgroup> atoms(const SubgroupLattice& lattice);
std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice);
/// Maximal subgroups of p-power index.
std::vector<Subgroup> max_p(const SubgroupLattice& lattice, std::uint64_t p);
std::vector<Subgroup> interval_atoms(const SubgroupLattice& lattice, const Subgroup& sub);

/// Intersection of the maximal subgroups.
Subgroup frattini(const SubgroupLattice& lattice);
/// Smallest normal subgroup of p-power index.
Subgroup o_p(const SubgroupLattice& lattice, std::uint64_t p);

/// DOT digraph: one node per subgroup labelled by its order, one edge per cover.
std::string export_dot(const SubgroupLattice& lattice);
/// JSON summary: subgroup count, edge count, delta, max degree, sorted degrees.
std::string lattice_report_json(const SubgroupLattice& lattice);
/// JSON array with one object per subgroup (index, order, degree, down, up, normal).
std::string degrees_report_json(const SubgroupLattice& lattice);

}  // namespace hasse
