#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hasse/family_tag.hpp"
#include "hasse/group.hpp"

namespace hasse {

/// Automorphism of a group A as the image list of its elements.
using Automorphism = std::vector<Element>;

// Abelian building blocks. Element indices are mixed-radix digit vectors
// with the first factor least significant, so C2^k elements are bit masks.
FiniteGroup cyclic(std::size_t n, std::size_t cap = Limits{}.construction);
FiniteGroup abelian(const std::vector<std::size_t>& factors,
                    std::size_t cap = Limits{}.construction);
FiniteGroup elementary_abelian(std::size_t p, std::size_t k,
                               std::size_t cap = Limits{}.construction);

/// Dihedral group of order 2m: element (i, e) = r^i s^e has index i + m*e.
FiniteGroup dihedral(std::size_t m, std::size_t cap = Limits{}.construction);
/// D(A) = A<t> with t acting by inversion; element (a, e) has index a + |A|*e.
/// Throws NotAbelian.
FiniteGroup generalized_dihedral(const FiniteGroup& a, std::size_t cap = Limits{}.construction);
/// Dicyclic group of order 4m (m = 2 gives Q8).
FiniteGroup dicyclic(std::size_t m, std::size_t cap = Limits{}.construction);
FiniteGroup symmetric(std::size_t n, std::size_t cap = Limits{}.construction);
FiniteGroup alternating(std::size_t n, std::size_t cap = Limits{}.construction);
/// Upper unitriangular 3x3 matrices over F_p (order p^3; exponent p for odd p).
FiniteGroup heisenberg(std::size_t p, std::size_t cap = Limits{}.construction);

/// Central product of r copies of D8 on pairs (v, e) in F2^2r x F2 with
/// (v, e)(w, f) = (v + w, e + f + B(v, w)), B(v, w) = sum_i v[x_i] w[y_i].
/// Bit 2i of v is x_i, bit 2i+1 is y_i, and z = (0, 1).
FiniteGroup wall_H(std::size_t r, std::size_t cap = Limits{}.construction);
/// C2^2r semidirect <z> of order 2, z acting by x_i -> x_i y_i, y_i -> y_i.
FiniteGroup wall_S(std::size_t r, std::size_t cap = Limits{}.construction);
/// C2^2r semidirect <z> of order 3 with [z, x_i] = x_i y_i and [z, y_i] = x_i.
FiniteGroup wall_T(std::size_t r, std::size_t cap = Limits{}.construction);

/// Throws NotAutomorphism unless `action` is a bijective endomorphism of `a`.
void check_automorphism(const FiniteGroup& a, std::span<const Element> action);
/// Inversion map of an abelian group (throws NotAbelian).
Automorphism inversion_automorphism(const FiniteGroup& a);
/// x -> x^k; throws NotAutomorphism when it is not one.
Automorphism power_automorphism(const FiniteGroup& a, std::int64_t k);
/// Extends generator images to an endomorphism and checks it is an automorphism.
Automorphism automorphism_from_images(const FiniteGroup& a, std::span<const Element> gens,
                                      std::span<const Element> images);

/// Split extension A semidirect C_m where the generator acts by `action`
/// (z a z^-1 = action(a)). Element (a, i) has index a + |A|*i.
/// Throws NotAutomorphism or ActionOrderMismatch (action^m != id).
FiniteGroup semidirect(const FiniteGroup& a, std::span<const Element> action, std::size_t m,
                       std::size_t cap = Limits{}.construction);
FiniteGroup semidirect_C2(const FiniteGroup& a, std::span<const Element> action,
                          std::size_t cap = Limits{}.construction);

/// Element (a, b) has index a * |G2| + b.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                           std::size_t cap = Limits{}.construction);
/// (G1 x G2) / <(z1, z2)>; throws NotCentralInvolution.
FiniteGroup central_product(const FiniteGroup& g1, const FiniteGroup& g2, Element z1, Element z2,
                            std::size_t cap = Limits{}.construction);

/// Named constructor plus integer parameters, as accepted by `construct`.
struct FamilySpec {
  std::string family;
  std::vector<std::int64_t> params;
};

/// Builds the group described by `spec` (throws InvalidArgument for unknown
/// families or bad parameters).
FiniteGroup construct(const FamilySpec& spec, std::size_t cap = Limits{}.construction);
/// Family names understood by construct().
std::vector<std::string> constructor_names();

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  std::set<FamilyTag> known_tags;
};

/// Every isomorphism type of order <= min(max_order, 16) followed by named
/// family representatives up to max_order. Entries of equal order are pairwise
/// non-isomorphic; duplicates found while building are merged.
std::vector<CatalogEntry> catalog(std::size_t max_order, const Limits& limits = {});

/// Representatives of the specific types that the degree theorems single out,
/// used to extend a catalog beyond its order bound.
std::vector<CatalogEntry> theorem_a_extras(const Limits& limits = {});

/// Merges `extra` into `base`, skipping groups isomorphic to an existing entry
/// (their known tags are added to that entry). Result is sorted by order.
std::vector<CatalogEntry> merge_catalog(std::vector<CatalogEntry> base,
                                        std::vector<CatalogEntry> extra,
                                        const Limits& limits = {});

}  // namespace hasse
