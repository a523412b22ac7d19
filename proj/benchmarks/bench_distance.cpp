#include <benchmark/benchmark.h>

#include "netpers/diagram_distance.hpp"
#include "netpers/network_distance.hpp"
#include "netpers/rng.hpp"

namespace {

std::vector<netpers::DiagramPoint> random_diagram(netpers::Rng& rng, int n) {
    std::vector<netpers::DiagramPoint> pts;
    for (int i = 0; i < n; ++i) {
        double birth = rng.next_real(0.0, 1.0);
        pts.push_back({birth, birth + rng.next_real(0.0, 0.5)});
    }
    return pts;
}

void BM_Bottleneck(benchmark::State& state) {
    netpers::Rng rng(7);
    auto a = random_diagram(rng, static_cast<int>(state.range(0)));
    auto b = random_diagram(rng, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(netpers::bottleneck_distance(a, b));
}
BENCHMARK(BM_Bottleneck)->Arg(16)->Arg(64)->Arg(256);

void BM_NetworkDistanceMaps(benchmark::State& state) {
    netpers::Rng rng(8);
    netpers::Network x = netpers::random_network(rng, static_cast<int>(state.range(0)), 0.0, 1.0);
    netpers::Network y = netpers::random_network(rng, static_cast<int>(state.range(0)), 0.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(netpers::network_distance_maps(x, y));
}
BENCHMARK(BM_NetworkDistanceMaps)->Arg(3)->Arg(4);

void BM_NetworkDistanceCorrespondences(benchmark::State& state) {
    netpers::Rng rng(9);
    netpers::Network x = netpers::random_network(rng, static_cast<int>(state.range(0)), 0.0, 1.0);
    netpers::Network y = netpers::random_network(rng, static_cast<int>(state.range(0)), 0.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(netpers::network_distance_correspondences(x, y));
}
BENCHMARK(BM_NetworkDistanceCorrespondences)->Arg(3)->Arg(4);

}  // namespace
