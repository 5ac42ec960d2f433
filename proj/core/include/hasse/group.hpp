#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hasse/element_set.hpp"

namespace hasse {

/// Elements of a group are the indices 0..n-1 of its Cayley table.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

/// Image list of a permutation of {0..degree-1}: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

/// Size caps for the expensive computations; all are configurable per call.
struct Limits {
  std::size_t construction = 4096;
  std::size_t isomorphism = 512;
  std::size_t lattice = 256;
};

/// A finite group given by its full multiplication table. Validated eagerly on
/// construction and immutable afterwards; copies share the table.
class FiniteGroup {
 public:
  /// Validates the table as a group and relabels so the identity sits at index 0.
  /// Throws Error{NotLatinSquare | NoIdentity | NoInverse | NotAssociative}.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                                       std::string name);

  /// Row-major variant used by the constructors: table[a * n + b] = a * b.
  static FiniteGroup from_flat_table(std::size_t n, std::vector<Element> table, std::string name);

  std::size_t order() const noexcept { return data_->n; }
  const std::string& name() const noexcept { return name_; }
  FiniteGroup renamed(std::string name) const;

  Element mul(Element a, Element b) const noexcept { return data_->table[a * data_->n + b]; }
  Element inv(Element a) const noexcept { return data_->inverse[a]; }
  Element pow(Element a, std::int64_t k) const noexcept;
  /// Conjugate g^-1 * h * g.
  Element conj(Element h, Element g) const noexcept { return mul(mul(inv(g), h), g); }
  /// Commutator [a, b] = a^-1 b^-1 a b.
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  std::uint32_t element_order(Element a) const noexcept { return data_->orders[a]; }
  const std::vector<std::uint32_t>& element_orders() const noexcept { return data_->orders; }

  /// Left-multiplication row: row(a)[b] = a * b.
  std::span<const Element> row(Element a) const noexcept {
    return {data_->table.data() + a * data_->n, data_->n};
  }
  const std::vector<Element>& flat_table() const noexcept { return data_->table; }
  std::vector<std::vector<Element>> table() const;

  /// Generating set found greedily by scanning elements in decreasing order.
  const std::vector<Element>& generators() const noexcept { return data_->generators; }

  /// Re-runs every axiom check on the stored table (throws on failure).
  void validate() const;

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::uint32_t> orders;
    std::vector<Element> generators;
  };

  FiniteGroup(std::shared_ptr<const Data> data, std::string name)
      : data_(std::move(data)), name_(std::move(name)) {}

  std::shared_ptr<const Data> data_;
  std::string name_;
};

/// Membership set of a subgroup. The parent group is supplied to each
/// operation; members().universe() equals the parent's order.
class Subgroup {
 public:
  Subgroup() = default;
  /// Trusted constructor: members must already form a subgroup.
  explicit Subgroup(ElementSet members) : members_(std::move(members)), order_(members_.count()) {}

  /// Validates identity, product closure, inverse closure and Lagrange.
  static Subgroup checked(const FiniteGroup& group, ElementSet members);

  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  std::vector<Element> elements() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.members_ == b.members_;
  }
  /// Size first, then lowest differing element.
  friend bool operator<(const Subgroup& a, const Subgroup& b) noexcept {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.members_ < b.members_;
  }

 private:
  ElementSet members_;
  std::size_t order_ = 0;
};

// Construction ------------------------------------------------------------

/// Cayley table of the permutation group generated by `generators`; element 0
/// is the identity permutation. Product a*b applies a first, then b.
FiniteGroup from_permutation_generators(std::size_t degree,
                                        const std::vector<Permutation>& generators,
                                        std::string name = "",
                                        std::size_t cap = Limits{}.construction);

/// Builds a permutation of {0..degree-1} from disjoint cycles.
Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& cycles);

// Element and subgroup arithmetic ----------------------------------------

Subgroup closure(const FiniteGroup& group, std::span<const Element> seed);
Subgroup closure(const FiniteGroup& group, const ElementSet& seed);
Subgroup trivial_subgroup(const FiniteGroup& group);
Subgroup whole_group(const FiniteGroup& group);

std::uint32_t element_order(const FiniteGroup& group, Element x);

/// Number of subgroups of prime order.
std::size_t delta(const FiniteGroup& group);
/// Number of elements of order exactly 2.
std::size_t involution_count(const FiniteGroup& group);

Subgroup center(const FiniteGroup& group);
Subgroup derived_subgroup(const FiniteGroup& group);
/// Subgroup generated by the commutators of elements of `sub`.
Subgroup commutator_subgroup(const FiniteGroup& group, const Subgroup& sub);
/// Lowest common multiple of the element orders.
std::uint64_t exponent(const FiniteGroup& group);
bool is_abelian(const FiniteGroup& group);
bool is_abelian(const FiniteGroup& group, const Subgroup& sub);
/// Abelian of exponent dividing p (the trivial group counts).
bool is_elementary_abelian(const FiniteGroup& group, std::uint64_t p);
bool is_elementary_abelian_2(const FiniteGroup& group, const Subgroup& sub);
bool is_cyclic(const FiniteGroup& group);

bool is_normal(const FiniteGroup& group, const Subgroup& sub);
/// True iff G/H is an elementary abelian 2-group, decided without building
/// the quotient table. Throws NotNormal if H is not normal.
bool quotient_is_elementary_abelian_2(const FiniteGroup& group, const Subgroup& sub);
/// Coset table of G/H; cosets are numbered by their smallest element.
FiniteGroup quotient_group(const FiniteGroup& group, const Subgroup& sub);
/// Regards a subgroup as a group in its own right (elements renumbered in increasing order).
FiniteGroup subgroup_as_group(const FiniteGroup& group, const Subgroup& sub, std::string name = "");

bool is_solvable(const FiniteGroup& group);

/// The set of p-power-order elements when it is closed under products (then it
/// is the unique Sylow p-subgroup); std::nullopt otherwise.
std::optional<Subgroup> sylow_p_elements_form_subgroup(const FiniteGroup& group, std::uint64_t p);

}  // namespace hasse
