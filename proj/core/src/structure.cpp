#include <numeric>

#include "hasse/error.hpp"
#include "hasse/group.hpp"
#include "hasse/number.hpp"

namespace hasse {

namespace {

Subgroup close_generators(const FiniteGroup& group, const std::vector<Element>& gens) {
  const std::size_t n = group.order();
  ElementSet seen(n);
  seen.insert(kIdentity);
  std::vector<Element> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element g : gens) {
      const Element y = group.mul(queue[i], g);
      if (seen.add(y)) queue.push_back(y);
    }
  }
  return Subgroup(std::move(seen));
}

}  // namespace

Subgroup closure(const FiniteGroup& group, std::span<const Element> seed) {
  std::vector<Element> gens;
  ElementSet present(group.order());
  for (Element x : seed) {
    if (x >= group.order())
      throw Error(ErrorKind::InvalidArgument, "element index out of range: " + std::to_string(x));
    if (x != kIdentity && present.add(x)) gens.push_back(x);
  }
  return close_generators(group, gens);
}

Subgroup closure(const FiniteGroup& group, const ElementSet& seed) {
  std::vector<Element> gens;
  seed.for_each([&](std::size_t x) {
    if (x != kIdentity) gens.push_back(static_cast<Element>(x));
  });
  return close_generators(group, gens);
}

Subgroup trivial_subgroup(const FiniteGroup& group) {
  ElementSet s(group.order());
  s.insert(kIdentity);
  return Subgroup(std::move(s));
}

Subgroup whole_group(const FiniteGroup& group) {
  return Subgroup(ElementSet::full(group.order()));
}

std::uint32_t element_order(const FiniteGroup& group, Element x) {
  if (x >= group.order())
    throw Error(ErrorKind::InvalidArgument, "element index out of range: " + std::to_string(x));
  return group.element_order(x);
}

std::size_t delta(const FiniteGroup& group) {
  // Each subgroup of prime order p contains exactly p - 1 elements of order p.
  std::vector<std::size_t> by_order(group.order() + 1, 0);
  for (auto o : group.element_orders()) ++by_order[o];
  std::size_t total = 0;
  for (std::size_t p = 2; p <= group.order(); ++p)
    if (by_order[p] && is_prime(p)) total += by_order[p] / (p - 1);
  return total;
}

std::size_t involution_count(const FiniteGroup& group) {
  std::size_t c = 0;
  for (auto o : group.element_orders()) c += (o == 2);
  return c;
}

Subgroup center(const FiniteGroup& group) {
  const std::size_t n = group.order();
  ElementSet z(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool central = true;
    for (Element g : group.generators()) {
      if (group.mul(static_cast<Element>(x), g) != group.mul(g, static_cast<Element>(x))) {
        central = false;
        break;
      }
    }
    if (central) z.insert(x);
  }
  return Subgroup(std::move(z));
}

Subgroup commutator_subgroup(const FiniteGroup& group, const Subgroup& sub) {
  const auto elems = sub.elements();
  ElementSet comms(group.order());
  for (Element a : elems)
    for (Element b : elems) comms.insert(group.commutator(a, b));
  return closure(group, comms);
}

Subgroup derived_subgroup(const FiniteGroup& group) {
  return commutator_subgroup(group, whole_group(group));
}

std::uint64_t exponent(const FiniteGroup& group) {
  std::uint64_t e = 1;
  for (auto o : group.element_orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

bool is_abelian(const FiniteGroup& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (group.mul(gens[i], gens[j]) != group.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_abelian(const FiniteGroup& group, const Subgroup& sub) {
  const auto elems = sub.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (group.mul(elems[i], elems[j]) != group.mul(elems[j], elems[i])) return false;
  return true;
}

bool is_elementary_abelian(const FiniteGroup& group, std::uint64_t p) {
  for (auto o : group.element_orders())
    if (o != 1 && o != p) return false;
  return is_abelian(group);
}

bool is_elementary_abelian_2(const FiniteGroup& group, const Subgroup& sub) {
  // Exponent 2 forces commutativity.
  bool ok = true;
  sub.members().for_each([&](std::size_t x) {
    if (group.element_order(static_cast<Element>(x)) > 2) ok = false;
  });
  return ok;
}

bool is_cyclic(const FiniteGroup& group) {
  for (auto o : group.element_orders())
    if (o == group.order()) return true;
  return false;
}

bool is_normal(const FiniteGroup& group, const Subgroup& sub) {
  const auto elems = sub.elements();
  for (Element g : group.generators())
    for (Element h : elems)
      if (!sub.contains(group.conj(h, g))) return false;
  return true;
}

bool quotient_is_elementary_abelian_2(const FiniteGroup& group, const Subgroup& sub) {
  if (!is_normal(group, sub))
    throw Error(ErrorKind::NotNormal, "subgroup is not normal in " + group.name());
  const std::size_t n = group.order();
  for (std::size_t g = 0; g < n; ++g) {
    const auto x = static_cast<Element>(g);
    if (!sub.contains(group.mul(x, x))) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!sub.contains(group.commutator(static_cast<Element>(a), static_cast<Element>(b))))
        return false;
  return true;
}

FiniteGroup quotient_group(const FiniteGroup& group, const Subgroup& sub) {
  if (!is_normal(group, sub))
    throw Error(ErrorKind::NotNormal, "subgroup is not normal in " + group.name());
  const std::size_t n = group.order();
  const auto members = sub.elements();
  constexpr auto kUnset = static_cast<Element>(-1);
  std::vector<Element> coset(n, kUnset);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (Element h : members) coset[group.mul(static_cast<Element>(x), h)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = coset[group.mul(reps[a], reps[b])];
  return FiniteGroup::from_flat_table(m, std::move(table),
                                      group.name() + "/N" + std::to_string(sub.order()));
}

FiniteGroup subgroup_as_group(const FiniteGroup& group, const Subgroup& sub, std::string name) {
  const auto elems = sub.elements();
  std::vector<Element> local(group.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  const std::size_t m = elems.size();
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = local[group.mul(elems[a], elems[b])];
  return FiniteGroup::from_flat_table(m, std::move(table), std::move(name));
}

bool is_solvable(const FiniteGroup& group) {
  Subgroup current = whole_group(group);
  while (current.order() > 1) {
    Subgroup next = commutator_subgroup(group, current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

std::optional<Subgroup> sylow_p_elements_form_subgroup(const FiniteGroup& group,
                                                       std::uint64_t p) {
  if (!is_prime(p) || group.order() % p != 0)
    throw Error(ErrorKind::InvalidArgument, "p must be a prime dividing the group order");
  ElementSet s(group.order());
  for (std::size_t x = 0; x < group.order(); ++x)
    if (is_power_of(group.element_order(static_cast<Element>(x)), p)) s.insert(x);
  const auto elems = s.to_vector();
  for (auto a : elems)
    for (auto b : elems)
      if (!s.contains(group.mul(static_cast<Element>(a), static_cast<Element>(b))))
        return std::nullopt;
  return Subgroup(std::move(s));
}

}  // namespace hasse
