#pragma once

// Naive reference computations over a raw Cayley table. Nothing here calls the
// library's closure, lattice or structure code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "hasse/group.hpp"

namespace oracle {

using Table = std::vector<std::vector<std::uint32_t>>;
using Set = std::vector<bool>;

inline Table table_of(const hasse::FiniteGroup& g) {
  Table t(g.order(), std::vector<std::uint32_t>(g.order()));
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

inline bool associative(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

// Cayley table of permutations closed under composition (apply a, then b).
inline Table permutation_table(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& gens) {
  std::vector<std::vector<std::uint32_t>> elems;
  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);
  elems.push_back(id);
  auto compose = [&](const auto& a, const auto& b) {
    std::vector<std::uint32_t> c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = b[a[i]];
    return c;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto c = compose(elems[i], g);
      if (std::find(elems.begin(), elems.end(), c) == elems.end()) elems.push_back(c);
    }
  Table t(elems.size(), std::vector<std::uint32_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      auto c = compose(elems[a], elems[b]);
      t[a][b] = static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), c) - elems.begin());
    }
  return t;
}

// Repeatedly multiplies everything until nothing new appears.
inline Set close(const Table& t, Set s) {
  s[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < t.size(); ++a) {
      if (!s[a]) continue;
      for (std::size_t b = 0; b < t.size(); ++b)
        if (s[b] && !s[t[a][b]]) s[t[a][b]] = grew = true;
    }
  }
  return s;
}

inline std::size_t count(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// Every subgroup is a join of cyclic subgroups: start with the cyclic ones
// and close pairwise unions until the family stops growing.
inline std::vector<Set> subgroups(const Table& t) {
  const std::size_t n = t.size();
  std::set<Set> found;
  std::vector<Set> cyclic;
  for (std::size_t x = 0; x < n; ++x) {
    Set s(n);
    s[x] = true;
    cyclic.push_back(close(t, s));
    found.insert(cyclic.back());
  }
  std::vector<Set> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        if (subset(c, h)) continue;
        Set u = h;
        for (std::size_t i = 0; i < n; ++i) u[i] = u[i] || c[i];
        Set j = close(t, u);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Set> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) { return count(a) < count(b); });
  return out;
}

inline bool strictly_inside(const Set& a, const Set& b) { return a != b && subset(a, b); }

// Cover pairs by scanning every possible intermediate subgroup.
inline std::vector<std::pair<std::size_t, std::size_t>> covers(const std::vector<Set>& subs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (!strictly_inside(subs[i], subs[j])) continue;
      bool between = false;
      for (std::size_t k = 0; k < subs.size() && !between; ++k)
        between = strictly_inside(subs[i], subs[k]) && strictly_inside(subs[k], subs[j]);
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

inline std::vector<std::size_t> degrees(const std::vector<Set>& subs) {
  std::vector<std::size_t> d(subs.size());
  for (auto [i, j] : covers(subs)) {
    ++d[i];
    ++d[j];
  }
  return d;
}

inline std::size_t element_order(const Table& t, std::uint32_t x) {
  std::size_t k = 1;
  for (std::uint32_t y = x; y != 0; y = t[y][x]) ++k;
  return k;
}

inline std::uint32_t inverse(const Table& t, std::uint32_t x) {
  for (std::uint32_t y = 0; y < t.size(); ++y)
    if (t[x][y] == 0) return y;
  return 0;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::size_t prime_order_subgroups(const Table& t) {
  std::size_t c = 0;
  for (const auto& s : subgroups(t)) c += is_prime(count(s));
  return c;
}

inline bool normal(const Table& t, const Set& h) {
  for (std::uint32_t g = 0; g < t.size(); ++g)
    for (std::uint32_t x = 0; x < t.size(); ++x)
      if (h[x] && !h[t[t[inverse(t, g)][x]][g]]) return false;
  return true;
}

inline bool abelian_on(const Table& t, const Set& h) {
  for (std::uint32_t a = 0; a < t.size(); ++a)
    for (std::uint32_t b = 0; b < t.size(); ++b)
      if (h[a] && h[b] && t[a][b] != t[b][a]) return false;
  return true;
}

// Some abelian subgroup A of index 2 and involution t outside A with t a t = a^-1.
inline bool generalized_dihedral(const Table& t) {
  const std::size_t n = t.size();
  for (const auto& a : subgroups(t)) {
    if (2 * count(a) != n || !abelian_on(t, a)) continue;
    for (std::uint32_t tau = 0; tau < n; ++tau) {
      if (a[tau] || t[tau][tau] != 0) continue;
      bool ok = true;
      for (std::uint32_t x = 0; x < n && ok; ++x)
        if (a[x]) ok = t[t[tau][x]][tau] == inverse(t, x);
      if (ok) return true;
    }
  }
  return false;
}

inline Set frattini(const Table& t) {
  auto subs = subgroups(t);
  const Set& top = subs.back();
  Set phi(t.size(), true);
  for (const auto& [i, j] : covers(subs))
    if (subs[j] == top)
      for (std::size_t x = 0; x < t.size(); ++x) phi[x] = phi[x] && subs[i][x];
  return phi;
}

}  // namespace oracle
