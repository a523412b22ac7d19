#include <benchmark/benchmark.h>

#include "netpers/filtration.hpp"
#include "netpers/rng.hpp"

namespace {

netpers::Network sized_network(int n) {
    netpers::Rng rng(1234);
    return netpers::random_network(rng, n, 0.0, 1.0);
}

void BM_DowkerSinkFiltration(benchmark::State& state) {
    netpers::Network x = sized_network(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(netpers::dowker_sink_filtration(x, 2));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DowkerSinkFiltration)->Arg(20)->Arg(40)->Arg(60)->Complexity();

void BM_RipsFiltration(benchmark::State& state) {
    netpers::Network x = sized_network(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(netpers::rips_filtration(x, 2));
}
BENCHMARK(BM_RipsFiltration)->Arg(20)->Arg(40)->Arg(60);

void BM_CycleFullSkeleton(benchmark::State& state) {
    netpers::Network g = netpers::cycle_network(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(netpers::dowker_sink_filtration(g, g.size() - 1));
}
BENCHMARK(BM_CycleFullSkeleton)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
