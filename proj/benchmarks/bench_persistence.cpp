#include <benchmark/benchmark.h>

#include "netpers/filtration.hpp"
#include "netpers/persistence.hpp"
#include "netpers/rng.hpp"

namespace {

void BM_Persistence(benchmark::State& state) {
    netpers::Rng rng(99);
    netpers::Network x = netpers::random_network(rng, static_cast<int>(state.range(0)), 0.0, 1.0);
    netpers::FilteredComplex f = netpers::dowker_sink_filtration(x, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(netpers::compute_persistence(f, 1));
    state.counters["simplices"] = static_cast<double>(f.size());
}
BENCHMARK(BM_Persistence)->Arg(20)->Arg(40)->Arg(60);

void BM_BettiNumbers(benchmark::State& state) {
    auto complex = netpers::SimplicialComplex::from_simplices(
        netpers::dowker_sink_filtration(netpers::cycle_network(static_cast<int>(state.range(0))),
                                        4)
            .complex_at(1e9));
    for (auto _ : state)
        benchmark::DoNotOptimize(netpers::betti_numbers(complex, 3));
}
BENCHMARK(BM_BettiNumbers)->Arg(10)->Arg(14);

}  // namespace
