#include <benchmark/benchmark.h>

#include "hasse/bounds.hpp"
#include "hasse/families.hpp"
#include "hasse/lattice.hpp"

namespace {

void BM_LatticeElementaryAbelian(benchmark::State& state) {
  const auto g = hasse::elementary_abelian(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto lat = hasse::all_subgroups(g, 4096);
    benchmark::DoNotOptimize(lat.edge_count());
  }
}
BENCHMARK(BM_LatticeElementaryAbelian)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_LatticeSymmetric4(benchmark::State& state) {
  const auto g = hasse::symmetric(4);
  for (auto _ : state) benchmark::DoNotOptimize(hasse::all_subgroups(g).size());
}
BENCHMARK(BM_LatticeSymmetric4);

void BM_DegreeProfile(benchmark::State& state) {
  const auto lat = hasse::all_subgroups(hasse::direct_product(hasse::dihedral(4), hasse::dihedral(4)));
  for (auto _ : state) benchmark::DoNotOptimize(hasse::degree_profile(lat));
}
BENCHMARK(BM_DegreeProfile);

void BM_GroupBounds(benchmark::State& state) {
  const auto lat = hasse::all_subgroups(hasse::symmetric(4));
  for (auto _ : state) benchmark::DoNotOptimize(hasse::group_bounds(lat));
}
BENCHMARK(BM_GroupBounds);

void BM_Catalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hasse::catalog(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Catalog)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
