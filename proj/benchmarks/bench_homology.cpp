#include <benchmark/benchmark.h>

#include "coarsetr/grp/subgroups.hpp"
#include "coarsetr/homology/homology.hpp"
#include "coarsetr/mackey/em.hpp"

using namespace coarsetr;

namespace {

coarse::Space free_orbit(grp::GroupPtr g, bool max) {
  auto s = grp::GSet::cosets(g, grp::trivial_subgroup(*g));
  return max ? coarse::Space::maximal(s) : coarse::Space::minimal(s);
}

// Homology of a maximal free orbit up to degree range(0).
void BM_MaximalOrbit(benchmark::State& state) {
  auto g = grp::symmetric_group(3);
  auto x = free_orbit(g, true);
  for (auto _ : state) {
    homology::Homology h(x, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(h.degree(0).group());
  }
}
BENCHMARK(BM_MaximalOrbit)->DenseRange(1, 3);

void BM_CyclicOrbit(benchmark::State& state) {
  auto g = grp::cyclic_group(static_cast<std::size_t>(state.range(0)));
  auto x = free_orbit(g, true);
  for (auto _ : state) {
    homology::Homology h(x, 2);
    benchmark::DoNotOptimize(h.degree(2).group());
  }
}
BENCHMARK(BM_CyclicOrbit)->Arg(2)->Arg(4)->Arg(6);

void BM_AssemblyA5(benchmark::State& state) {
  auto a5 = grp::alternating_group(5);
  auto f = grp::SubgroupFamily::solvable(a5);
  for (auto _ : state) benchmark::DoNotOptimize(mackey::assembly(a5, f, 0).injective);
}
BENCHMARK(BM_AssemblyA5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
