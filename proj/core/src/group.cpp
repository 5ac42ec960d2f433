#include "hasse/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "hasse/error.hpp"

namespace hasse {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::ActionOrderMismatch: return "ActionOrderMismatch";
    case ErrorKind::NotCentralInvolution: return "NotCentralInvolution";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::PrimesNotDistinct: return "PrimesNotDistinct";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InputError: return "InputError";
  }
  return "Unknown";
}

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

void check_latin_square(std::size_t n, const std::vector<Element>& t) {
  std::vector<std::size_t> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t b = 0; b < n; ++b) {
      const Element v = t[a * n + b];
      if (v >= n)
        throw Error(ErrorKind::NotLatinSquare,
                    "entry at row " + std::to_string(a) + ", column " + std::to_string(b) +
                        " is out of range: " + std::to_string(v));
      if (seen[v] != n)
        throw Error(ErrorKind::NotLatinSquare,
                    "row " + std::to_string(a) + " repeats value " + std::to_string(v) +
                        " at columns " + std::to_string(seen[v]) + " and " + std::to_string(b));
      seen[v] = b;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t a = 0; a < n; ++a) {
      const Element v = t[a * n + b];
      if (seen[v] != n)
        throw Error(ErrorKind::NotLatinSquare,
                    "column " + std::to_string(b) + " repeats value " + std::to_string(v) +
                        " at rows " + std::to_string(seen[v]) + " and " + std::to_string(a));
      seen[v] = a;
    }
  }
}

std::size_t find_identity(std::size_t n, const std::vector<Element>& t) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) return e;
  }
  throw Error(ErrorKind::NoIdentity, "no element is a two-sided identity");
}

// Swaps the labels of elements 0 and e so that the identity becomes 0.
std::vector<Element> relabel_identity(std::size_t n, const std::vector<Element>& t, std::size_t e) {
  if (e == 0) return t;
  auto swap_label = [&](std::size_t x) -> std::size_t {
    if (x == 0) return e;
    if (x == e) return 0;
    return x;
  };
  std::vector<Element> out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out[a * n + b] =
          static_cast<Element>(swap_label(t[swap_label(a) * n + swap_label(b)]));
  return out;
}

std::vector<Element> compute_inverses(std::size_t n, const std::vector<Element>& t) {
  std::vector<Element> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (b < n && t[a * n + b] != kIdentity) ++b;
    if (b == n || t[b * n + a] != kIdentity)
      throw Error(ErrorKind::NoInverse,
                  "element " + std::to_string(a) + " has no two-sided inverse");
    inv[a] = static_cast<Element>(b);
  }
  return inv;
}

// Right powers x, x*x, (x*x)*x, ... return to the identity because right
// multiplication by x is a permutation of a Latin square.
std::vector<std::uint32_t> compute_orders(std::size_t n, const std::vector<Element>& t) {
  std::vector<std::uint32_t> orders(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    std::uint32_t k = 1;
    Element x = static_cast<Element>(a);
    while (x != kIdentity) {
      x = t[x * n + a];
      ++k;
    }
    orders[a] = k;
  }
  return orders;
}

// Elements reachable from the identity by right multiplication with gens.
ElementSet right_closure(std::size_t n, const std::vector<Element>& t,
                         const std::vector<Element>& gens) {
  ElementSet seen(n);
  std::vector<Element> queue{kIdentity};
  seen.insert(kIdentity);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element g : gens) {
      const Element y = t[queue[i] * n + g];
      if (seen.add(y)) queue.push_back(y);
    }
  }
  return seen;
}

std::vector<Element> greedy_generators(std::size_t n, const std::vector<Element>& t,
                                       const std::vector<std::uint32_t>& orders) {
  std::vector<Element> by_order(n);
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return orders[a] > orders[b]; });
  std::vector<Element> gens;
  ElementSet reached(n);
  reached.insert(kIdentity);
  for (Element x : by_order) {
    if (reached.count() == n) break;
    if (reached.contains(x)) continue;
    gens.push_back(x);
    reached = right_closure(n, t, gens);
  }
  return gens;
}

// Light's test: the elements g with (xg)y = x(gy) for all x, y form a
// sub-magma, so checking a generating set decides associativity.
void check_associative(std::size_t n, const std::vector<Element>& t,
                       const std::vector<Element>& gens) {
  for (Element g : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      const Element xg = t[x * n + g];
      for (std::size_t y = 0; y < n; ++y) {
        if (t[xg * n + y] != t[x * n + t[g * n + y]])
          throw Error(ErrorKind::NotAssociative,
                      "(x*y)*z != x*(y*z) for (x, y, z) = " + triple(x, g, y));
      }
    }
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& table,
                                           std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty Cayley table");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::NotLatinSquare,
                  "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                      " entries, expected " + std::to_string(n));
    flat.insert(flat.end(), table[a].begin(), table[a].end());
  }
  return from_flat_table(n, std::move(flat), std::move(name));
}

FiniteGroup FiniteGroup::from_flat_table(std::size_t n, std::vector<Element> table,
                                         std::string name) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty Cayley table");
  if (table.size() != n * n)
    throw Error(ErrorKind::InvalidArgument, "table size is not n*n");
  check_latin_square(n, table);
  const std::size_t e = find_identity(n, table);
  auto data = std::make_shared<Data>();
  data->n = n;
  data->table = relabel_identity(n, table, e);
  data->inverse = compute_inverses(n, data->table);
  data->orders = compute_orders(n, data->table);
  data->generators = greedy_generators(n, data->table, data->orders);
  check_associative(n, data->table, data->generators);
  return FiniteGroup(std::move(data), std::move(name));
}

void FiniteGroup::validate() const {
  const std::size_t n = order();
  check_latin_square(n, data_->table);
  if (find_identity(n, data_->table) != 0)
    throw Error(ErrorKind::NoIdentity, "identity is not at index 0");
  compute_inverses(n, data_->table);
  if (right_closure(n, data_->table, data_->generators).count() != n)
    throw Error(ErrorKind::InvalidArgument, "stored generators do not generate the group");
  check_associative(n, data_->table, data_->generators);
}

FiniteGroup FiniteGroup::renamed(std::string name) const { return FiniteGroup(data_, std::move(name)); }

Element FiniteGroup::pow(Element a, std::int64_t k) const noexcept {
  const std::int64_t ord = element_order(a);
  k %= ord;
  if (k < 0) k += ord;
  Element result = kIdentity;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  const std::size_t n = order();
  std::vector<std::vector<Element>> out(n);
  for (std::size_t a = 0; a < n; ++a) out[a].assign(row(static_cast<Element>(a)).begin(), row(static_cast<Element>(a)).end());
  return out;
}

Subgroup Subgroup::checked(const FiniteGroup& group, ElementSet members) {
  const std::size_t n = group.order();
  if (members.universe() != n)
    throw Error(ErrorKind::InvalidArgument, "membership set does not match the group order");
  if (!members.contains(kIdentity))
    throw Error(ErrorKind::InvalidArgument, "subgroup does not contain the identity");
  const auto elems = members.to_vector();
  for (std::size_t a : elems) {
    if (!members.contains(group.inv(static_cast<Element>(a))))
      throw Error(ErrorKind::InvalidArgument,
                  "not closed under inverse at element " + std::to_string(a));
    for (std::size_t b : elems) {
      if (!members.contains(group.mul(static_cast<Element>(a), static_cast<Element>(b))))
        throw Error(ErrorKind::InvalidArgument,
                    "not closed under product at (" + std::to_string(a) + ", " +
                        std::to_string(b) + ")");
    }
  }
  if (n % elems.size() != 0)
    throw Error(ErrorKind::InvalidArgument, "subgroup order does not divide the group order");
  return Subgroup(std::move(members));
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  members_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = cycle[i];
      if (from >= degree || used[from])
        throw Error(ErrorKind::InvalidArgument, "cycles are not disjoint within the degree");
      used[from] = true;
      p[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

FiniteGroup from_permutation_generators(std::size_t degree,
                                        const std::vector<Permutation>& generators,
                                        std::string name, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.size() != degree)
      throw Error(ErrorKind::InvalidArgument, "generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v])
        throw Error(ErrorKind::InvalidArgument, "generator is not a permutation");
      hit[v] = true;
    }
  }
  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);

  std::vector<Permutation> elems{identity};
  std::unordered_map<Permutation, Element, boost::hash<Permutation>> index{{identity, 0}};
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  // right[i * k + s] = index of elems[i] * generators[s]
  std::vector<Element> right;
  const std::size_t k = generators.size();

  Permutation next(degree);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t x = 0; x < degree; ++x) next[x] = generators[s][elems[i][x]];
      auto [it, fresh] = index.try_emplace(next, static_cast<Element>(elems.size()));
      if (fresh) {
        if (elems.size() >= cap)
          throw Error(ErrorKind::GroupTooLarge,
                      "generated group exceeds the construction cap of " + std::to_string(cap));
        elems.push_back(next);
        parent.push_back(static_cast<Element>(i));
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) {
      // a * b = (a * parent(b)) * generator(b); BFS order guarantees parent(b) < b.
      table[a * n + b] = right[table[a * n + parent[b]] * k + via[b]];
    }
  }
  return FiniteGroup::from_flat_table(n, std::move(table), std::move(name));
}

}  // namespace hasse
