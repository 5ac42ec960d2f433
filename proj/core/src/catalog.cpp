#include <array>
#include <set>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "hasse/error.hpp"
#include "hasse/families.hpp"
#include "hasse/isomorphism.hpp"
#include "hasse/number.hpp"

namespace hasse {

std::string to_string(TheoremAType t) {
  static const char* const kNames[] = {"", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
  return kNames[static_cast<int>(t)];
}

std::string to_string(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::F1Small: return "F1";
    case Family::F2TheoremA: return "F2(" + to_string(tag.subtype) + ")";
    case Family::F3ElemAb2: return "F3";
    case Family::F4C2sC4: return "F4";
    case Family::F5GenExtraspecial: return "F5";
    case Family::F6CpnC2: return "F6";
    case Family::F7D12: return "F7";
    case Family::WallIToIV: return "WALL";
  }
  return "?";
}

std::optional<FamilyTag> parse_family_tag(const std::string& text) {
  static const std::map<std::string, Family> kPlain = {
      {"F1", Family::F1Small},           {"F3", Family::F3ElemAb2}, {"F4", Family::F4C2sC4},
      {"F5", Family::F5GenExtraspecial}, {"F6", Family::F6CpnC2},   {"F7", Family::F7D12},
      {"WALL", Family::WallIToIV}};
  if (auto it = kPlain.find(text); it != kPlain.end()) return FamilyTag{it->second};
  for (int t = 1; t <= 10; ++t) {
    const auto type = static_cast<TheoremAType>(t);
    if (text == "F2(" + to_string(type) + ")") return FamilyTag::theorem_a(type);
  }
  return std::nullopt;
}

namespace {

std::size_t param(const FamilySpec& spec, std::size_t i) {
  if (i >= spec.params.size())
    throw Error(ErrorKind::InvalidArgument,
                spec.family + " expects at least " + std::to_string(i + 1) + " parameter(s)");
  if (spec.params[i] < 0)
    throw Error(ErrorKind::InvalidArgument, spec.family + " parameters must be non-negative");
  return static_cast<std::size_t>(spec.params[i]);
}

std::vector<std::size_t> all_params(const FamilySpec& spec) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < spec.params.size(); ++i) out.push_back(param(spec, i));
  return out;
}

void expect_count(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    throw Error(ErrorKind::InvalidArgument, spec.family + " expects " + std::to_string(count) +
                                                " parameter(s), got " +
                                                std::to_string(spec.params.size()));
}

}  // namespace

std::vector<std::string> constructor_names() {
  return {"trivial",   "cyclic",       "abelian",     "elementary-abelian", "dihedral",
          "generalized-dihedral",      "dicyclic",    "quaternion",         "symmetric",
          "alternating", "heisenberg", "wall-h",      "wall-s",             "wall-t"};
}

FiniteGroup construct(const FamilySpec& spec, std::size_t cap) {
  const std::string& f = spec.family;
  if (f == "trivial") return expect_count(spec, 0), cyclic(1, cap);
  if (f == "cyclic") return expect_count(spec, 1), cyclic(param(spec, 0), cap);
  if (f == "abelian") return abelian(all_params(spec), cap);
  if (f == "elementary-abelian")
    return expect_count(spec, 2), elementary_abelian(param(spec, 0), param(spec, 1), cap);
  if (f == "dihedral") return expect_count(spec, 1), dihedral(param(spec, 0), cap);
  if (f == "generalized-dihedral") return generalized_dihedral(abelian(all_params(spec), cap), cap);
  if (f == "dicyclic") return expect_count(spec, 1), dicyclic(param(spec, 0), cap);
  if (f == "quaternion") return expect_count(spec, 0), dicyclic(2, cap);
  if (f == "symmetric") return expect_count(spec, 1), symmetric(param(spec, 0), cap);
  if (f == "alternating") return expect_count(spec, 1), alternating(param(spec, 0), cap);
  if (f == "heisenberg") return expect_count(spec, 1), heisenberg(param(spec, 0), cap);
  if (f == "wall-h") return expect_count(spec, 1), wall_H(param(spec, 0), cap);
  if (f == "wall-s") return expect_count(spec, 1), wall_S(param(spec, 0), cap);
  if (f == "wall-t") return expect_count(spec, 1), wall_T(param(spec, 0), cap);
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + f + "'");
}

namespace {

using Tags = std::set<FamilyTag>;

const FamilyTag kF1{Family::F1Small};
const FamilyTag kF3{Family::F3ElemAb2};
const FamilyTag kF4{Family::F4C2sC4};
const FamilyTag kF5{Family::F5GenExtraspecial};
const FamilyTag kF6{Family::F6CpnC2};
const FamilyTag kF7{Family::F7D12};
const FamilyTag kWall{Family::WallIToIV};
FamilyTag A(TheoremAType t) { return FamilyTag::theorem_a(t); }

struct Candidate {
  std::size_t order;
  std::string name;
  std::function<FiniteGroup(std::size_t cap)> build;
  Tags tags;
};

FiniteGroup x(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  return direct_product(a, b, cap);
}

// z a z^-1 = a^k on a cyclic group of order n.
FiniteGroup metacyclic(std::size_t n, std::int64_t k, std::size_t m, std::size_t cap) {
  const FiniteGroup base = cyclic(n, cap);
  return semidirect(base, power_automorphism(base, k), m, cap);
}

// Linear group over F3 acting on the 8 nonzero vectors of F3^2.
FiniteGroup matrix_group_f3(const std::vector<std::array<int, 4>>& mats, std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& m : mats) {
    Permutation p(8);
    for (int v = 1; v < 9; ++v) {
      const int x = v % 3, y = v / 3;
      const int nx = (m[0] * x + m[1] * y) % 3, ny = (m[2] * x + m[3] * y) % 3;
      p[v - 1] = static_cast<std::uint32_t>(nx + 3 * ny - 1);
    }
    gens.push_back(std::move(p));
  }
  return from_permutation_generators(8, gens, "", cap);
}

// Multiplication by x on F8 = F2[x]/(x^3 + x + 1), bits b0 + b1 x + b2 x^2.
Automorphism f8_frobenius_free_mult(const FiniteGroup& c2cubed) {
  Automorphism act(8);
  for (unsigned w = 0; w < 8; ++w) {
    const unsigned b0 = w & 1u, b1 = (w >> 1) & 1u, b2 = (w >> 2) & 1u;
    act[w] = static_cast<Element>(b2 | ((b0 ^ b2) << 1) | (b1 << 2));
  }
  check_automorphism(c2cubed, act);
  return act;
}

// (a, b) -> (-b, a) on C3 x C3, an automorphism of order 4.
Automorphism c3sq_rotation(const FiniteGroup& c3sq) {
  Automorphism act(9);
  for (unsigned w = 0; w < 9; ++w) {
    const unsigned a = w % 3, b = w / 3;
    act[w] = static_cast<Element>((3 - b) % 3 + 3 * a);
  }
  check_automorphism(c3sq, act);
  return act;
}

Automorphism coordinate_swap(const FiniteGroup& base, std::size_t p) {
  Automorphism act(p * p);
  for (std::size_t w = 0; w < p * p; ++w) act[w] = static_cast<Element>((w / p) + p * (w % p));
  check_automorphism(base, act);
  return act;
}

std::vector<Candidate> candidates() {
  using T = TheoremAType;
  std::vector<Candidate> c;
  auto add = [&](std::size_t order, std::string name, std::function<FiniteGroup(std::size_t)> b,
                 Tags tags = {}) { c.push_back({order, std::move(name), std::move(b), std::move(tags)}); };
  auto C = [](std::size_t n) { return [n](std::size_t cap) { return cyclic(n, cap); }; };
  auto Ab = [](std::vector<std::size_t> f) { return [f](std::size_t cap) { return abelian(f, cap); }; };
  auto D = [](std::size_t m) { return [m](std::size_t cap) { return dihedral(m, cap); }; };
  auto Dic = [](std::size_t m) { return [m](std::size_t cap) { return dicyclic(m, cap); }; };
  auto GD = [](std::vector<std::size_t> f) {
    return [f](std::size_t cap) { return generalized_dihedral(abelian(f, cap), cap); };
  };
  auto E2 = [](std::size_t k) { return [k](std::size_t cap) { return elementary_abelian(2, k, cap); }; };
  const Tags dA = {A(T::I), kWall};

  // Every isomorphism type through order 16.
  add(1, "C1", C(1));
  add(2, "C2", C(2), {kF1, kF3, A(T::I), kWall});
  add(3, "C3", C(3), {kF1, A(T::VI)});
  add(4, "C4", C(4), {kF1, kF4});
  add(4, "C2^2", E2(2), {kF1, kF3, A(T::I), kWall});
  add(5, "C5", C(5));
  add(6, "C6", C(6));
  add(6, "S3", D(3), {kF1, kF6, A(T::I), kWall});
  add(7, "C7", C(7));
  add(8, "C8", C(8));
  add(8, "C4xC2", Ab({2, 4}), {kF1, kF4});
  add(8, "C2^3", E2(3), {kF1, kF3, A(T::I), kWall});
  add(8, "D8", D(4), {kF1, kF5, A(T::I), A(T::III), A(T::IV), kWall});
  add(8, "Q8", Dic(2), {kF1, kF5});
  add(9, "C9", C(9));
  add(9, "C3^2", Ab({3, 3}), {kF1, A(T::VI)});
  add(10, "C10", C(10));
  add(10, "D10", D(5), {kF1, kF6, A(T::I), kWall});
  add(11, "C11", C(11));
  add(12, "C12", C(12));
  add(12, "C6xC2", Ab({2, 6}));
  add(12, "D12", D(6), {kF7, A(T::I), kWall});
  add(12, "A4", [](std::size_t cap) { return alternating(4, cap); }, {A(T::V)});
  add(12, "Dic12", Dic(3));
  add(13, "C13", C(13));
  add(14, "C14", C(14));
  add(14, "D14", D(7), {kF6, A(T::I), kWall});
  add(15, "C15", C(15));
  add(16, "C16", C(16));
  add(16, "C4^2", Ab({4, 4}));
  add(16, "C2^2xC4", Ab({2, 2, 4}), {kF4});
  add(16, "C8xC2", Ab({2, 8}));
  add(16, "C2^4", E2(4), {kF3, A(T::I), kWall});
  add(16, "D16", D(8), dA);
  add(16, "Q16", Dic(4));
  add(16, "SD16", [](std::size_t cap) { return metacyclic(8, 3, 2, cap); });
  add(16, "M16", [](std::size_t cap) { return metacyclic(8, 5, 2, cap); });
  add(16, "D8xC2", [](std::size_t cap) { return x(dihedral(4, cap), cyclic(2, cap), cap); },
      {kF5, A(T::I), A(T::III), A(T::IV), kWall});
  add(16, "Q8xC2", [](std::size_t cap) { return x(dicyclic(2, cap), cyclic(2, cap), cap); }, {kF5});
  add(16, "C4oD8", [](std::size_t cap) { return central_product(cyclic(4, cap), dihedral(4, cap), 2, 2, cap); },
      {kF5});
  add(16, "C4:C4", [](std::size_t cap) { return metacyclic(4, -1, 4, cap); });
  add(16, "C2^2:C4", [](std::size_t cap) {
    const FiniteGroup base = elementary_abelian(2, 2, cap);
    return semidirect(base, coordinate_swap(base, 2), 4, cap);
  });

  // Family representatives and assorted groups above order 16.
  add(18, "C18", C(18));
  add(18, "C6xC3", Ab({3, 6}), {kF6});
  add(18, "D18", D(9), dA);
  add(18, "S3xC3", [](std::size_t cap) { return x(dihedral(3, cap), cyclic(3, cap), cap); }, {kF6});
  add(18, "D(C3^2)", GD({3, 3}), {kF6, A(T::I), kWall});
  add(20, "C20", C(20));
  add(20, "C10xC2", Ab({2, 10}));
  add(20, "D20", D(10), dA);
  add(20, "Dic20", Dic(5));
  add(20, "F20", [](std::size_t cap) { return metacyclic(5, 2, 4, cap); });
  add(21, "C21", C(21));
  add(21, "C7:C3", [](std::size_t cap) { return metacyclic(7, 2, 3, cap); });
  add(22, "C22", C(22));
  add(22, "D22", D(11), {kF6, A(T::I), kWall});
  add(24, "C24", C(24));
  add(24, "C12xC2", Ab({2, 12}));
  add(24, "C6xC2^2", Ab({2, 2, 6}));
  add(24, "S4", [](std::size_t cap) { return symmetric(4, cap); }, {A(T::IX)});
  add(24, "SL(2,3)", [](std::size_t cap) { return matrix_group_f3({{1, 1, 0, 1}, {1, 0, 1, 1}}, cap); });
  add(24, "C3:C8", [](std::size_t cap) { return metacyclic(3, -1, 8, cap); });
  add(24, "Dic24", Dic(6));
  add(24, "D24", D(12), dA);
  add(24, "A4xC2", [](std::size_t cap) { return x(alternating(4, cap), cyclic(2, cap), cap); });
  add(24, "D12xC2", GD({2, 6}), dA);
  add(24, "Dic12xC2", [](std::size_t cap) { return x(dicyclic(3, cap), cyclic(2, cap), cap); });
  add(24, "S3xC4", [](std::size_t cap) { return x(dihedral(3, cap), cyclic(4, cap), cap); });
  add(24, "D8xC3", [](std::size_t cap) { return x(dihedral(4, cap), cyclic(3, cap), cap); });
  add(24, "Q8xC3", [](std::size_t cap) { return x(dicyclic(2, cap), cyclic(3, cap), cap); });
  add(25, "C25", C(25));
  add(25, "C5^2", Ab({5, 5}));
  add(26, "C26", C(26));
  add(26, "D26", D(13), {kF6, A(T::I), kWall});
  add(27, "C27", C(27));
  add(27, "C9xC3", Ab({3, 9}));
  add(27, "C3^3", Ab({3, 3, 3}), {A(T::VI)});
  add(27, "He3", [](std::size_t cap) { return heisenberg(3, cap); }, {A(T::VI)});
  add(27, "C9:C3", [](std::size_t cap) { return metacyclic(9, 4, 3, cap); });
  add(28, "C28", C(28));
  add(28, "C14xC2", Ab({2, 14}));
  add(28, "D28", D(14), dA);
  add(28, "Dic28", Dic(7));
  add(30, "C30", C(30));
  add(30, "D30", D(15), dA);
  add(30, "S3xC5", [](std::size_t cap) { return x(dihedral(3, cap), cyclic(5, cap), cap); });
  add(30, "D10xC3", [](std::size_t cap) { return x(dihedral(5, cap), cyclic(3, cap), cap); });
  add(32, "C32", C(32));
  add(32, "C2^5", E2(5), {kF3, A(T::I), kWall});
  add(32, "C2^3xC4", Ab({2, 2, 2, 4}), {kF4});
  add(32, "C4^2xC2", Ab({2, 4, 4}));
  add(32, "C8xC4", Ab({4, 8}));
  add(32, "C8xC2^2", Ab({2, 2, 8}));
  add(32, "C16xC2", Ab({2, 16}));
  add(32, "D32", D(16), dA);
  add(32, "Q32", Dic(8));
  add(32, "SD32", [](std::size_t cap) { return metacyclic(16, 7, 2, cap); });
  add(32, "D8xC2^2", [](std::size_t cap) { return x(dihedral(4, cap), elementary_abelian(2, 2, cap), cap); },
      {kF5, A(T::I), A(T::III), A(T::IV), kWall});
  add(32, "Q8xC2^2", [](std::size_t cap) { return x(dicyclic(2, cap), elementary_abelian(2, 2, cap), cap); },
      {kF5});
  add(32, "C4oD8xC2", [](std::size_t cap) {
    return x(central_product(cyclic(4, cap), dihedral(4, cap), 2, 2, cap), cyclic(2, cap), cap);
  }, {kF5});
  add(32, "H(2)", [](std::size_t cap) { return wall_H(2, cap); }, {kF5, A(T::III), kWall});
  add(32, "Q8oD8", [](std::size_t cap) { return central_product(dicyclic(2, cap), dihedral(4, cap), 2, 2, cap); },
      {kF5});
  add(32, "S(2)", [](std::size_t cap) { return wall_S(2, cap); }, {A(T::IV), kWall});
  add(32, "D8xC4", [](std::size_t cap) { return x(dihedral(4, cap), cyclic(4, cap), cap); });
  add(32, "Q8xC4", [](std::size_t cap) { return x(dicyclic(2, cap), cyclic(4, cap), cap); });
  add(32, "D16xC2", GD({2, 8}), dA);
  add(32, "D(C4^2)", GD({4, 4}), dA);
  add(32, "C4:C4xC2", [](std::size_t cap) { return x(metacyclic(4, -1, 4, cap), cyclic(2, cap), cap); });
  add(32, "C2^2:C4xC2", [](std::size_t cap) {
    const FiniteGroup base = elementary_abelian(2, 2, cap);
    return x(semidirect(base, coordinate_swap(base, 2), 4, cap), cyclic(2, cap), cap);
  });
  add(33, "C33", C(33));
  add(34, "C34", C(34));
  add(34, "D34", D(17), {kF6, A(T::I), kWall});
  add(35, "C35", C(35));
  add(36, "C36", C(36));
  add(36, "C6^2", Ab({6, 6}));
  add(36, "C12xC3", Ab({3, 12}));
  add(36, "C18xC2", Ab({2, 18}));
  add(36, "S3xS3", [](std::size_t cap) { return x(dihedral(3, cap), dihedral(3, cap), cap); }, {A(T::VIII)});
  add(36, "D36", D(18), dA);
  add(36, "Dic36", Dic(9));
  add(36, "A4xC3", [](std::size_t cap) { return x(alternating(4, cap), cyclic(3, cap), cap); });
  add(36, "S3xC6", [](std::size_t cap) { return x(dihedral(3, cap), cyclic(6, cap), cap); });
  add(36, "D(C6xC3)", GD({3, 6}), dA);
  add(36, "C3^2:C4", [](std::size_t cap) {
    const FiniteGroup base = abelian({3, 3}, cap);
    return semidirect(base, c3sq_rotation(base), 4, cap);
  });
  add(36, "Dic12xC3", [](std::size_t cap) { return x(dicyclic(3, cap), cyclic(3, cap), cap); });
  add(38, "D38", D(19), {kF6, A(T::I), kWall});
  add(39, "C13:C3", [](std::size_t cap) { return metacyclic(13, 3, 3, cap); });
  add(40, "C40", C(40));
  add(40, "D40", D(20), dA);
  add(40, "D20xC2", GD({2, 10}), dA);
  add(40, "D8xC5", [](std::size_t cap) { return x(dihedral(4, cap), cyclic(5, cap), cap); });
  add(42, "C42", C(42));
  add(42, "D42", D(21), dA);
  add(42, "S3xC7", [](std::size_t cap) { return x(dihedral(3, cap), cyclic(7, cap), cap); });
  add(42, "C7:C6", [](std::size_t cap) { return metacyclic(7, 3, 6, cap); });
  add(44, "D44", D(22), dA);
  add(44, "Dic44", Dic(11));
  add(46, "D46", D(23), {kF6, A(T::I), kWall});
  add(48, "C48", C(48));
  add(48, "C6xC2^3", Ab({2, 2, 2, 6}));
  add(48, "S4xC2", [](std::size_t cap) { return x(symmetric(4, cap), cyclic(2, cap), cap); });
  add(48, "T(2)", [](std::size_t cap) { return wall_T(2, cap); }, {A(T::V)});
  add(48, "S3xD8", [](std::size_t cap) { return x(dihedral(3, cap), dihedral(4, cap), cap); }, {A(T::VII)});
  add(48, "S3xQ8", [](std::size_t cap) { return x(dihedral(3, cap), dicyclic(2, cap), cap); });
  add(48, "D48", D(24), dA);
  add(48, "D(C12xC2)", GD({2, 12}), dA);
  add(48, "D(C6xC2^2)", GD({2, 2, 6}), dA);
  add(48, "A4xC4", [](std::size_t cap) { return x(alternating(4, cap), cyclic(4, cap), cap); });
  add(48, "A4xC2^2", [](std::size_t cap) { return x(alternating(4, cap), elementary_abelian(2, 2, cap), cap); });
  add(48, "SL(2,3)xC2", [](std::size_t cap) {
    return x(matrix_group_f3({{1, 1, 0, 1}, {1, 0, 1, 1}}, cap), cyclic(2, cap), cap);
  });
  add(48, "GL(2,3)", [](std::size_t cap) { return matrix_group_f3({{1, 1, 0, 1}, {0, 1, 1, 0}, {2, 0, 0, 1}}, cap); });
  add(50, "D50", D(25), dA);
  add(50, "D(C5^2)", GD({5, 5}), {kF6, A(T::I), kWall});
  add(50, "D10xC5", [](std::size_t cap) { return x(dihedral(5, cap), cyclic(5, cap), cap); }, {kF6});
  add(50, "C10xC5", Ab({5, 10}), {kF6});
  add(52, "C13:C4", [](std::size_t cap) { return metacyclic(13, 5, 4, cap); });
  add(54, "D54", D(27), dA);
  add(54, "D(C3^3)", GD({3, 3, 3}), {kF6, A(T::I), kWall});
  add(54, "C3^3xC2", Ab({2, 3, 3, 3}), {kF6});
  add(54, "S3xC3^2", [](std::size_t cap) { return x(dihedral(3, cap), abelian({3, 3}, cap), cap); }, {kF6});
  add(54, "He3xC2", [](std::size_t cap) { return x(heisenberg(3, cap), cyclic(2, cap), cap); });
  add(54, "D18xC3", [](std::size_t cap) { return x(dihedral(9, cap), cyclic(3, cap), cap); });
  add(55, "C11:C5", [](std::size_t cap) { return metacyclic(11, 3, 5, cap); });
  add(56, "D56", D(28), dA);
  add(56, "C2^3:C7", [](std::size_t cap) {
    const FiniteGroup base = elementary_abelian(2, 3, cap);
    return semidirect(base, f8_frobenius_free_mult(base), 7, cap);
  });
  add(56, "C2^3xC7", Ab({2, 2, 2, 7}));
  add(57, "C19:C3", [](std::size_t cap) { return metacyclic(19, 7, 3, cap); });
  add(58, "D58", D(29), {kF6, A(T::I), kWall});
  add(60, "A5", [](std::size_t cap) { return alternating(5, cap); }, {A(T::X)});
  add(60, "C60", C(60));
  add(60, "D60", D(30), dA);
  add(60, "A4xC5", [](std::size_t cap) { return x(alternating(4, cap), cyclic(5, cap), cap); });
  add(60, "S3xD10", [](std::size_t cap) { return x(dihedral(3, cap), dihedral(5, cap), cap); });
  add(60, "Dic60", Dic(15));
  add(62, "D62", D(31), {kF6, A(T::I), kWall});
  add(63, "C7:C9", [](std::size_t cap) { return metacyclic(7, 2, 9, cap); });
  add(64, "C64", C(64));
  add(64, "C2^6", E2(6), {kF3, A(T::I), kWall});
  add(64, "C2^4xC4", Ab({2, 2, 2, 2, 4}), {kF4});
  add(64, "D8xD8", [](std::size_t cap) { return x(dihedral(4, cap), dihedral(4, cap), cap); }, {A(T::II), kWall});
  add(64, "D8xC2^3", [](std::size_t cap) { return x(dihedral(4, cap), elementary_abelian(2, 3, cap), cap); },
      {kF5, A(T::I), A(T::III), A(T::IV), kWall});
  add(64, "H(2)xC2", [](std::size_t cap) { return x(wall_H(2, cap), cyclic(2, cap), cap); },
      {kF5, A(T::III), kWall});
  add(64, "S(2)xC2", [](std::size_t cap) { return x(wall_S(2, cap), cyclic(2, cap), cap); }, {A(T::IV), kWall});
  add(64, "Q8xC2^3", [](std::size_t cap) { return x(dicyclic(2, cap), elementary_abelian(2, 3, cap), cap); },
      {kF5});
  add(64, "Q8oD8xC2", [](std::size_t cap) {
    return x(central_product(dicyclic(2, cap), dihedral(4, cap), 2, 2, cap), cyclic(2, cap), cap);
  }, {kF5});
  add(64, "C4oD8xC2^2", [](std::size_t cap) {
    return x(central_product(cyclic(4, cap), dihedral(4, cap), 2, 2, cap), elementary_abelian(2, 2, cap), cap);
  }, {kF5});
  add(64, "D32xC2", GD({2, 16}), dA);
  add(64, "D64", D(32), dA);
  add(64, "D(C8xC4)", GD({4, 8}), dA);
  add(64, "D(C4^2xC2)", GD({2, 4, 4}), dA);
  add(64, "C4^3", Ab({4, 4, 4}));
  add(64, "Q8xQ8", [](std::size_t cap) { return x(dicyclic(2, cap), dicyclic(2, cap), cap); });
  add(64, "D8xQ8", [](std::size_t cap) { return x(dihedral(4, cap), dicyclic(2, cap), cap); });
  add(64, "D16xC4", [](std::size_t cap) { return x(dihedral(8, cap), cyclic(4, cap), cap); });
  add(72, "S3xS3xC2", [](std::size_t cap) {
    return x(x(dihedral(3, cap), dihedral(3, cap), cap), cyclic(2, cap), cap);
  });
  add(81, "He3xC3", [](std::size_t cap) { return x(heisenberg(3, cap), cyclic(3, cap), cap); }, {A(T::VI)});
  add(81, "C3^4", Ab({3, 3, 3, 3}), {A(T::VI)});
  add(96, "S3xD8xC2", [](std::size_t cap) {
    return x(x(dihedral(3, cap), dihedral(4, cap), cap), cyclic(2, cap), cap);
  }, {A(T::VII)});
  add(128, "H(3)", [](std::size_t cap) { return wall_H(3, cap); }, {kF5, A(T::III), kWall});
  add(128, "S(3)", [](std::size_t cap) { return wall_S(3, cap); }, {A(T::IV), kWall});
  add(128, "D8xD8xC2", [](std::size_t cap) {
    return x(x(dihedral(4, cap), dihedral(4, cap), cap), cyclic(2, cap), cap);
  }, {A(T::II), kWall});
  add(192, "T(3)", [](std::size_t cap) { return wall_T(3, cap); }, {A(T::V)});
  return c;
}

struct Indexed {
  CatalogEntry entry;
  GroupInvariants inv;
};

// Adds `e` unless an isomorphic group is already present; then its tags merge.
void insert_unique(std::vector<Indexed>& out, CatalogEntry e, const Limits& limits) {
  const bool can_compare = e.group.order() <= limits.isomorphism;
  GroupInvariants inv = can_compare ? invariants(e.group) : GroupInvariants{};
  if (can_compare) {
    for (auto& existing : out) {
      if (existing.entry.group.order() != e.group.order() || !(existing.inv == inv)) continue;
      if (is_isomorphic(existing.entry.group, e.group, limits.isomorphism)) {
        existing.entry.known_tags.insert(e.known_tags.begin(), e.known_tags.end());
        return;
      }
    }
  }
  out.push_back({std::move(e), std::move(inv)});
}

std::vector<CatalogEntry> finish(std::vector<Indexed> items) {
  std::stable_sort(items.begin(), items.end(), [](const Indexed& a, const Indexed& b) {
    return a.entry.group.order() < b.entry.group.order();
  });
  std::vector<CatalogEntry> out;
  out.reserve(items.size());
  for (auto& i : items) out.push_back(std::move(i.entry));
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog(std::size_t max_order, const Limits& limits) {
  if (max_order == 0) throw Error(ErrorKind::InvalidArgument, "max_order must be >= 1");
  std::vector<Indexed> items;
  for (const auto& cand : candidates()) {
    if (cand.order > max_order) continue;
    FiniteGroup g = cand.build(limits.construction).renamed(cand.name);
    if (g.order() != cand.order)
      throw std::logic_error("catalog candidate " + cand.name + " has order " +
                             std::to_string(g.order()));
    insert_unique(items, CatalogEntry{cand.name, std::move(g), cand.tags}, limits);
  }
  return finish(std::move(items));
}

std::vector<CatalogEntry> theorem_a_extras(const Limits& limits) {
  using T = TheoremAType;
  const std::size_t cap = limits.construction;
  auto entry = [](std::string name, FiniteGroup g, Tags tags) {
    return CatalogEntry{name, g.renamed(name), std::move(tags)};
  };
  return {
      entry("S4", symmetric(4, cap), {A(T::IX)}),
      entry("S3xS3", direct_product(dihedral(3, cap), dihedral(3, cap), cap), {A(T::VIII)}),
      entry("T(1)", wall_T(1, cap), {A(T::V)}),
      entry("T(2)", wall_T(2, cap), {A(T::V)}),
      entry("H(1)", wall_H(1, cap), {kF5, A(T::III), kWall}),
      entry("H(2)", wall_H(2, cap), {kF5, A(T::III), kWall}),
      entry("S(1)", wall_S(1, cap), {A(T::IV), kWall}),
      entry("S(2)", wall_S(2, cap), {A(T::IV), kWall}),
      entry("A5", alternating(5, cap), {A(T::X)}),
      entry("He3", heisenberg(3, cap), {A(T::VI)}),
      entry("S3xD8", direct_product(dihedral(3, cap), dihedral(4, cap), cap), {A(T::VII)}),
  };
}

std::vector<CatalogEntry> merge_catalog(std::vector<CatalogEntry> base,
                                        std::vector<CatalogEntry> extra, const Limits& limits) {
  std::vector<Indexed> items;
  for (auto& e : base) insert_unique(items, std::move(e), limits);
  for (auto& e : extra) insert_unique(items, std::move(e), limits);
  return finish(std::move(items));
}

}  // namespace hasse
