#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <string>

#include "isocov/engine.hpp"
#include "isocov/io.hpp"
#include "isocov/topsis.hpp"

namespace {

isocov::DecisionProblem fixture_problem() {
    const std::string dir = ISOCOV_FIXTURE_DIR;
    return isocov::io::load_problem(dir + "/table1.csv", dir + "/table2.json", true);
}

// m routes by n metrics, every other metric constrained to its middle half.
isocov::DecisionProblem synthetic(std::size_t m, std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unit(1.0, 100.0);
    isocov::DecisionProblem p;
    p.ratings = isocov::Matrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        p.alternatives.push_back("r" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) p.ratings(i, j) = unit(rng);
    }
    for (std::size_t j = 0; j < n; ++j) {
        isocov::CriterionSpec c{"q" + std::to_string(j),
                                j % 3 == 0 ? isocov::Nature::Benefit : isocov::Nature::Cost,
                                1.0 / static_cast<double>(n),
                                {},
                                {}};
        if (j % 2 == 0) {
            auto col = p.ratings.column(j);
            auto [lo, hi] = std::minmax_element(col.begin(), col.end());
            c.lower_bound = *lo + 0.25 * (*hi - *lo);
            c.upper_bound = *lo + 0.75 * (*hi - *lo);
        }
        p.criteria.push_back(c);
    }
    return p;
}

void BM_IsocovFixture(benchmark::State& state) {
    const auto p = fixture_problem();
    for (auto _ : state) benchmark::DoNotOptimize(isocov::rank_isocov(p));
}
BENCHMARK(BM_IsocovFixture);

void BM_TopsisFixture(benchmark::State& state) {
    const auto p = fixture_problem();
    for (auto _ : state) benchmark::DoNotOptimize(isocov::rank_topsis(p));
}
BENCHMARK(BM_TopsisFixture);

void BM_IsocovSynthetic(benchmark::State& state) {
    const auto p = synthetic(static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(isocov::rank_isocov(p));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsocovSynthetic)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_CompareReport(benchmark::State& state) {
    auto hard = fixture_problem();
    auto soft = hard;
    soft.hard = false;
    for (auto _ : state) {
        std::vector<isocov::RankingReport> reports{isocov::rank_isocov(hard), isocov::rank_isocov(soft),
                                                   isocov::rank_topsis(hard)};
        benchmark::DoNotOptimize(isocov::io::emit_comparison(reports, isocov::io::Format::Table));
    }
}
BENCHMARK(BM_CompareReport);

}  // namespace
