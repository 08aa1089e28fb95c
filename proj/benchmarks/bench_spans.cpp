#include <benchmark/benchmark.h>

#include "coarsetr/fuzz/generators.hpp"
#include "coarsetr/spans/span.hpp"

using namespace coarsetr;

namespace {

void BM_ComposeChain(benchmark::State& state) {
  fuzz::Rng rng(7);
  std::vector<std::vector<spans::Span>> chains;
  for (int i = 0; i < 64; ++i) chains.push_back(fuzz::random_span_chain(rng, 3, fuzz::Limits{}));
  std::size_t i = 0;
  for (auto _ : state) {
    auto const& c = chains[i++ % chains.size()];
    benchmark::DoNotOptimize(spans::compose(spans::compose(c[0], c[1]), c[2]));
  }
}
BENCHMARK(BM_ComposeChain);

void BM_TransferIndex(benchmark::State& state) {
  auto g = grp::cyclic_group(2);
  auto x = coarse::Space::maximal(grp::GSet::trivial(g, 3));
  auto index = grp::GSet::trivial(g, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spans::transfer_index(x, index));
}
BENCHMARK(BM_TransferIndex)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
