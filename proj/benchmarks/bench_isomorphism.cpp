#include <benchmark/benchmark.h>

#include "hasse/families.hpp"
#include "hasse/group.hpp"
#include "hasse/isomorphism.hpp"

namespace {

hasse::Element central_involution(const hasse::FiniteGroup& g) {
  for (hasse::Element x : hasse::center(g).elements())
    if (hasse::element_order(g, x) == 2) return x;
  return 0;
}

void BM_IsomorphicWallH2(benchmark::State& state) {
  const auto d8 = hasse::dihedral(4);
  const auto a = hasse::central_product(d8, d8, central_involution(d8), central_involution(d8));
  const auto b = hasse::wall_H(2);
  for (auto _ : state) benchmark::DoNotOptimize(hasse::is_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphicWallH2);

void BM_NonIsomorphicC4Squared(benchmark::State& state) {
  const auto a = hasse::abelian({4, 4});
  const auto c4 = hasse::cyclic(4);
  const auto b = hasse::semidirect(c4, hasse::power_automorphism(c4, 3), 4);
  for (auto _ : state) benchmark::DoNotOptimize(hasse::is_isomorphic(a, b));
}
BENCHMARK(BM_NonIsomorphicC4Squared);

void BM_Invariants(benchmark::State& state) {
  const auto g = hasse::symmetric(5);
  for (auto _ : state) benchmark::DoNotOptimize(hasse::invariants(g));
}
BENCHMARK(BM_Invariants);

}  // namespace
