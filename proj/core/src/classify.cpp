#include "hasse/classify.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "hasse/error.hpp"
#include "hasse/number.hpp"

namespace hasse {

namespace {

using T = TheoremAType;

constexpr int kD12Key = 100;

std::optional<unsigned> log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) return std::nullopt;
  unsigned m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  return m;
}

std::string tag_list(const std::set<FamilyTag>& tags) {
  std::string s = "{";
  for (const auto& t : tags) {
    if (s.size() > 1) s += ",";
    s += to_string(t);
  }
  return s + "}";
}

}  // namespace

bool has_large_degree_vertex(const SubgroupLattice& lattice) {
  if (lattice.group().order() == 1)
    throw Error(ErrorKind::TrivialGroup, "degree threshold needs a nontrivial group");
  return 2 * (max_degree(lattice).second + 1) > lattice.group().order();
}

bool Recognition::has_theorem_a(TheoremAType lo, TheoremAType hi) const {
  return std::any_of(tags.begin(), tags.end(), [&](const FamilyTag& t) {
    return t.family == Family::F2TheoremA && t.subtype >= lo && t.subtype <= hi;
  });
}

bool Recognition::undecided_theorem_a(TheoremAType lo, TheoremAType hi) const {
  return std::any_of(undecided.begin(), undecided.end(), [&](const FamilyTag& t) {
    return t.family == Family::F2TheoremA && t.subtype >= lo && t.subtype <= hi;
  });
}

bool Recognizer::small_non_cyclic(const FiniteGroup& g) {
  std::size_t n = g.order();
  return n >= 2 && n <= 11 && !(n >= 5 && is_cyclic(g));
}

bool Recognizer::elementary_abelian_2(const FiniteGroup& g) {
  return g.order() >= 2 && exponent(g) == 2;
}

bool Recognizer::c2s_times_c4(const FiniteGroup& g) {
  if (!is_abelian(g) || exponent(g) != 4) return false;
  std::size_t roots = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(x, x) == kIdentity) ++roots;
  return 2 * roots == g.order();
}

bool Recognizer::generalized_extraspecial(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  if (!log2_exact(g.order())) return false;
  Subgroup d = derived_subgroup(g);
  if (d.order() != 2) return false;
  return frattini(lattice) == d && d.members().is_subset_of(center(g).members());
}

bool Recognizer::cpn_by_c2(const FiniteGroup& g) {
  std::size_t n = g.order();
  if (n % 2 != 0 || (n / 2) % 2 == 0 || n / 2 == 1) return false;
  auto parts = factorize(n / 2);
  if (parts.size() != 1) return false;
  std::uint64_t p = parts.front().first;
  auto sylow = sylow_p_elements_form_subgroup(g, p);
  if (!sylow || !is_abelian(g, *sylow)) return false;
  bool elementary = true;
  sylow->members().for_each([&](std::size_t x) {
    if (x != kIdentity && g.element_order(static_cast<Element>(x)) != p) elementary = false;
  });
  return elementary;
}

bool Recognizer::generalized_dihedral(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  std::size_t n = g.order();
  if (n % 2 != 0) return false;
  for (const Subgroup& a : lattice.subgroups()) {
    if (2 * a.order() != n || !is_abelian(g, a)) continue;
    auto members = a.elements();
    for (Element t = 0; t < n; ++t) {
      if (a.contains(t) || g.element_order(t) != 2) continue;
      bool inverts = std::all_of(members.begin(), members.end(),
                                 [&](Element x) { return g.conj(x, t) == g.inv(x); });
      if (inverts) return true;
    }
  }
  return false;
}

bool Recognizer::exponent_3(const FiniteGroup& g) { return g.order() >= 3 && exponent(g) == 3; }

const Recognizer::Representative& Recognizer::representative(Key key) {
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto [type, r, e] = key;
  std::size_t cap = limits_.construction;
  auto with_e = [&](FiniteGroup base) {
    return e == 0 ? base : direct_product(base, elementary_abelian(2, e, cap), cap);
  };
  std::optional<FiniteGroup> g;
  if (type == kD12Key) {
    g = dihedral(6, cap);
  } else {
    switch (static_cast<T>(type)) {
      case T::II: g = with_e(direct_product(dihedral(4, cap), dihedral(4, cap), cap)); break;
      case T::III: g = with_e(wall_H(r, cap)); break;
      case T::IV: g = with_e(wall_S(r, cap)); break;
      case T::V: g = wall_T(r, cap); break;
      case T::VII: g = with_e(direct_product(symmetric(3, cap), dihedral(4, cap), cap)); break;
      case T::VIII: g = direct_product(symmetric(3, cap), symmetric(3, cap), cap); break;
      case T::IX: g = symmetric(4, cap); break;
      case T::X: g = alternating(5, cap); break;
      default: throw std::logic_error("no representative for this type");
    }
  }
  GroupInvariants inv = invariants(*g);
  return cache_.emplace(key, Representative{std::move(*g), std::move(inv)}).first->second;
}

std::optional<bool> Recognizer::matches(const FiniteGroup& g, const GroupInvariants& inv, Key key) {
  const Representative* rep = nullptr;
  try {
    rep = &representative(key);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::GroupTooLarge) return std::nullopt;
    throw;
  }
  if (rep->group.order() != g.order()) throw std::logic_error("representative order mismatch");
  if (!(rep->invariants == inv)) return false;
  if (g.order() > limits_.isomorphism) return std::nullopt;
  return is_isomorphic(g, rep->group, limits_.isomorphism).has_value();
}

Recognition Recognizer::recognize(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  const std::size_t n = g.order();
  Recognition out;
  if (n == 1) return out;

  if (small_non_cyclic(g)) out.tags.insert({Family::F1Small});
  if (elementary_abelian_2(g)) out.tags.insert({Family::F3ElemAb2});
  if (c2s_times_c4(g)) out.tags.insert({Family::F4C2sC4});
  if (generalized_extraspecial(lattice)) out.tags.insert({Family::F5GenExtraspecial});
  if (cpn_by_c2(g)) out.tags.insert({Family::F6CpnC2});
  if (generalized_dihedral(lattice)) out.tags.insert(FamilyTag::theorem_a(T::I));
  if (exponent_3(g)) out.tags.insert(FamilyTag::theorem_a(T::VI));

  // Candidate representatives of this order, grouped by the tag they confer.
  std::vector<std::pair<FamilyTag, Key>> keys;
  auto a = [](T t) { return FamilyTag::theorem_a(t); };
  if (auto m = log2_exact(n)) {
    if (*m >= 6) keys.push_back({a(T::II), {int(T::II), 0, *m - 6}});
    for (std::size_t r = 1; 2 * r + 1 <= *m; ++r)
      keys.push_back({a(T::III), {int(T::III), r, *m - 2 * r - 1}});
    for (std::size_t r = 1; 2 * r + 1 <= *m; ++r)
      keys.push_back({a(T::IV), {int(T::IV), r, *m - 2 * r - 1}});
  }
  if (n % 3 == 0) {
    if (auto m = log2_exact(n / 3); m && *m >= 2 && *m % 2 == 0)
      keys.push_back({a(T::V), {int(T::V), *m / 2, 0}});
  }
  if (n % 48 == 0) {
    if (auto m = log2_exact(n / 48)) keys.push_back({a(T::VII), {int(T::VII), 0, *m}});
  }
  if (n == 36) keys.push_back({a(T::VIII), {int(T::VIII), 0, 0}});
  if (n == 24) keys.push_back({a(T::IX), {int(T::IX), 0, 0}});
  if (n == 60) keys.push_back({a(T::X), {int(T::X), 0, 0}});
  if (n == 12) keys.push_back({FamilyTag{Family::F7D12}, {kD12Key, 0, 0}});

  if (!keys.empty()) {
    GroupInvariants inv = invariants(g);
    for (const auto& [tag, key] : keys) {
      if (out.has(tag)) continue;
      auto result = matches(g, inv, key);
      if (!result) {
        if (std::find(out.undecided.begin(), out.undecided.end(), tag) == out.undecided.end())
          out.undecided.push_back(tag);
      } else if (*result) {
        out.tags.insert(tag);
      }
    }
    std::erase_if(out.undecided, [&](const FamilyTag& t) { return out.has(t); });
  }

  const FamilyTag wall{Family::WallIToIV};
  if (out.has_theorem_a(T::I, T::IV))
    out.tags.insert(wall);
  else if (out.undecided_theorem_a(T::I, T::IV))
    out.undecided.push_back(wall);
  return out;
}

Recognition recognize(const SubgroupLattice& lattice, const Limits& limits) {
  return Recognizer(limits).recognize(lattice);
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["theorem"] = report.theorem;
  j["max_order"] = report.max_order;
  j["groups_checked"] = report.groups_checked;
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : report.counterexamples)
    list.push_back(nlohmann::ordered_json{{"group", c.group}, {"detail", c.detail}});
  j["counterexamples"] = std::move(list);
  j["passed"] = report.passed;
  return j.dump(2) + "\n";
}

namespace {

struct Context {
  const CatalogEntry& entry;
  const SubgroupLattice& lattice;
  Recognition tags;
};

template <class Check>
VerificationReport run(std::string theorem, const std::vector<CatalogEntry>& catalog,
                       std::size_t max_order, const Limits& limits, bool solvable_only,
                       Check check) {
  VerificationReport report;
  report.theorem = std::move(theorem);
  report.max_order = max_order;
  Recognizer recognizer(limits);
  for (const CatalogEntry& entry : catalog) {
    const FiniteGroup& g = entry.group;
    if (g.order() == 1 || g.order() > max_order) continue;
    if (solvable_only && !is_solvable(g)) continue;
    ++report.groups_checked;
    try {
      SubgroupLattice lattice = all_subgroups(g, limits.lattice);
      Context ctx{entry, lattice, recognizer.recognize(lattice)};
      if (auto detail = check(ctx)) report.counterexamples.push_back({entry.name, *detail});
    } catch (const Error& e) {
      report.counterexamples.push_back({entry.name, std::string("undecided: ") + e.what()});
    }
  }
  report.passed = report.counterexamples.empty();
  return report;
}

std::string undecided_detail(const Recognition& r) {
  std::string s = "undecided tags:";
  for (const auto& t : r.undecided) s += " " + to_string(t);
  return s;
}

// Compares the numeric property against family membership in both directions.
std::optional<std::string> biconditional(bool property, bool member, bool undecided,
                                         const std::string& evidence, const Recognition& r) {
  if (property == member) {
    if (!member && undecided) return undecided_detail(r);
    return std::nullopt;
  }
  if (property && undecided) return undecided_detail(r) + "; " + evidence;
  return evidence + (property ? " but no matching tag" : " yet tagged") + "; tags " + tag_list(r.tags);
}

}  // namespace

VerificationReport verify_large_degree(const std::vector<CatalogEntry>& catalog,
                                       std::size_t max_order, const Limits& limits) {
  return run("theorem-1.1", catalog, max_order, limits, true,
             [](const Context& c) -> std::optional<std::string> {
               if (!has_large_degree_vertex(c.lattice)) return std::nullopt;
               const Recognition& r = c.tags;
               bool member = r.has_theorem_a(T::I, T::IX) ||
                             std::any_of(r.tags.begin(), r.tags.end(), [](const FamilyTag& t) {
                               return t.family != Family::F2TheoremA && t.family != Family::WallIToIV;
                             });
               if (member) return std::nullopt;
               auto [sub, d] = max_degree(c.lattice);
               std::string evidence = "vertex of order " + std::to_string(sub.order()) +
                                      " has degree " + std::to_string(d) + " > |G|/2 - 1";
               if (r.undecided_theorem_a(T::I, T::IX) ||
                   std::any_of(r.undecided.begin(), r.undecided.end(),
                               [](const FamilyTag& t) { return t.family == Family::F7D12; }))
                 return undecided_detail(r) + "; " + evidence;
               return evidence + " but no family tag";
             });
}

VerificationReport verify_prime_order_count(const std::vector<CatalogEntry>& catalog,
                                            std::size_t max_order, const Limits& limits) {
  return run("theorem-a", catalog, max_order, limits, false,
             [](const Context& c) -> std::optional<std::string> {
               std::size_t n = c.entry.group.order();
               std::size_t d = delta(c.entry.group);
               return biconditional(2 * (d + 1) > n, c.tags.has_theorem_a(T::I, T::X),
                                    c.tags.undecided_theorem_a(T::I, T::X),
                                    "delta " + std::to_string(d) + " vs order " + std::to_string(n),
                                    c.tags);
             });
}

VerificationReport verify_involution_count(const std::vector<CatalogEntry>& catalog,
                                           std::size_t max_order, const Limits& limits) {
  return run("wall", catalog, max_order, limits, false,
             [](const Context& c) -> std::optional<std::string> {
               std::size_t n = c.entry.group.order();
               std::size_t i2 = involution_count(c.entry.group);
               return biconditional(2 * (i2 + 1) > n, c.tags.has_theorem_a(T::I, T::IV),
                                    c.tags.undecided_theorem_a(T::I, T::IV),
                                    "i2 " + std::to_string(i2) + " vs order " + std::to_string(n),
                                    c.tags);
             });
}

VerificationReport verify_three_quarter_degree(const std::vector<CatalogEntry>& catalog,
                                               std::size_t max_order, const Limits& limits) {
  return run("cor-1.2", catalog, max_order, limits, true,
             [](const Context& c) -> std::optional<std::string> {
               std::size_t n = c.entry.group.order();
               auto [sub, d] = max_degree(c.lattice);
               return biconditional(4 * d >= 3 * n, c.tags.has({Family::F3ElemAb2}), false,
                                    "max degree " + std::to_string(d) + " at order " +
                                        std::to_string(sub.order()) + " vs 3|G|/4 with |G| = " +
                                        std::to_string(n),
                                    c.tags);
             });
}

VerificationReport verify_half_degree(const std::vector<CatalogEntry>& catalog,
                                      std::size_t max_order, const Limits& limits) {
  return run("cor-1.3", catalog, max_order, limits, true,
             [](const Context& c) -> std::optional<std::string> {
               std::size_t n = c.entry.group.order();
               std::optional<std::size_t> witness;
               for (std::size_t i = 0; i < c.lattice.size() && !witness; ++i)
                 if (2 * degree(c.lattice, i) == n) witness = i;
               const Recognition& r = c.tags;
               bool member = r.has(FamilyTag::theorem_a(T::VII)) || r.has({Family::F3ElemAb2}) ||
                             r.has({Family::F4C2sC4}) || r.has({Family::F5GenExtraspecial});
               bool undecided = std::find(r.undecided.begin(), r.undecided.end(),
                                          FamilyTag::theorem_a(T::VII)) != r.undecided.end();
               std::string evidence =
                   witness ? "vertex of order " + std::to_string(c.lattice.subgroup(*witness).order()) +
                                 " has degree " + std::to_string(n / 2) + " = |G|/2"
                           : "no vertex of degree |G|/2 = " + std::to_string(n) + "/2";
               return biconditional(witness.has_value(), member, undecided, evidence, r);
             });
}

}  // namespace hasse
