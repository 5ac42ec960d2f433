#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace hasse {

/// Families of the main classification (1..7) plus the involution-count family.
enum class Family : std::uint8_t {
  F1Small,            // order <= 11, not cyclic of order 5..11
  F2TheoremA,         // large prime-order-subgroup count, carries a subtype I..X
  F3ElemAb2,          // elementary abelian 2-group
  F4C2sC4,            // C2^(s-1) x C4
  F5GenExtraspecial,  // G' = Phi(G) of order 2, G' <= Z(G)
  F6CpnC2,            // C_p^n semidirect C2, p odd
  F7D12,              // dihedral of order 12
  WallIToIV,          // subtypes I..IV: large involution count
};

enum class TheoremAType : std::uint8_t { None = 0, I, II, III, IV, V, VI, VII, VIII, IX, X };

struct FamilyTag {
  Family family = Family::F1Small;
  TheoremAType subtype = TheoremAType::None;

  static FamilyTag theorem_a(TheoremAType t) { return {Family::F2TheoremA, t}; }

  friend auto operator<=>(const FamilyTag&, const FamilyTag&) = default;
};

std::string to_string(TheoremAType t);
/// "F1", "F2(IX)", "F5", "WALL", ...
std::string to_string(const FamilyTag& tag);
std::optional<FamilyTag> parse_family_tag(const std::string& text);

}  // namespace hasse
