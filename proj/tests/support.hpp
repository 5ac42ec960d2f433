#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hasse/families.hpp"
#include "hasse/group.hpp"

namespace testing_support {

inline const std::vector<hasse::CatalogEntry>& catalog_64() {
  static const auto entries = hasse::catalog(64);
  return entries;
}

inline const hasse::CatalogEntry& entry(const std::string& name) {
  for (const auto& e : catalog_64())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog entry " + name);
}

// Same group with elements renamed by a random permutation (identity may move).
inline hasse::FiniteGroup relabel(const hasse::FiniteGroup& g, std::mt19937_64& rng) {
  const std::size_t n = g.order();
  std::vector<hasse::Element> pi(n);
  std::iota(pi.begin(), pi.end(), 0u);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<std::vector<hasse::Element>> t(n, std::vector<hasse::Element>(n));
  for (hasse::Element a = 0; a < n; ++a)
    for (hasse::Element b = 0; b < n; ++b) t[pi[a]][pi[b]] = pi[g.mul(a, b)];
  return hasse::FiniteGroup::from_cayley_table(t, g.name() + "'");
}

}  // namespace testing_support
