#include <benchmark/benchmark.h>

#include <string>

#include "isocov/topology.hpp"

namespace {

// Complete digraph: the worst case for simple-path enumeration.
isocov::Topology complete(std::size_t n) {
    isocov::Topology t;
    for (std::size_t k = 0; k < n; ++k) t.nodes.push_back("v" + std::to_string(k));
    t.source = t.nodes.front();
    t.destination = t.nodes.back();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v) t.links.push_back({t.nodes[u], t.nodes[v], {{"delay", 1.0 + u + v}}});
        }
    }
    return t;
}

void BM_EnumerateComplete(benchmark::State& state) {
    const auto t = complete(static_cast<std::size_t>(state.range(0)));
    std::size_t routes = 0;
    for (auto _ : state) {
        auto r = isocov::enumerate_routes(t, 10'000'000);
        routes = r.size();
        benchmark::DoNotOptimize(r);
    }
    state.counters["routes"] = static_cast<double>(routes);
}
BENCHMARK(BM_EnumerateComplete)->DenseRange(4, 9);

void BM_BuildProblem(benchmark::State& state) {
    const auto t = complete(7);
    const std::vector<isocov::CriterionSpec> criteria{
        {"delay", isocov::Nature::Cost, 0.7, {}, {}},
        {"hop_count", isocov::Nature::Cost, 0.3, {}, {}},
    };
    for (auto _ : state) benchmark::DoNotOptimize(isocov::build_problem(t, criteria, true));
}
BENCHMARK(BM_BuildProblem);

}  // namespace
