#include <benchmark/benchmark.h>

#include "switchover/chung_lu.hpp"
#include "switchover/fixtures.hpp"
#include "switchover/harness.hpp"
#include "switchover/percolation.hpp"

using namespace switchover;

namespace {

void BM_percolation_sample(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    Graph g = clique_core_pendants_graph(r, r + r / 2);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        Rng rng(substream(RngStream{1, 0}, trial++));
        PercolationOutcome out = sample_percolation(g, 0.5, rng);
        benchmark::DoNotOptimize(out.components.size());
    }
    state.SetItemsProcessed(state.iterations() * g.m_edges());
}
BENCHMARK(BM_percolation_sample)->Arg(20)->Arg(60)->Arg(120);

void BM_sweep_point(benchmark::State& state) {
    CanonicalParams params;
    params.n = 60;
    params.r = 40;
    Scenario scenario = canonical_scenario("clique-core-pendants", params);
    SweepConfig config;
    config.s = 0.1;
    config.beta_grid = {0.5};
    config.trials = state.range(0);
    for (auto _ : state) {
        auto records = run_sweep(scenario, config);
        benchmark::DoNotOptimize(records[0].diff.mean);
    }
    state.SetItemsProcessed(state.iterations() * config.trials);
}
BENCHMARK(BM_sweep_point)->Arg(100)->Arg(1000);

void BM_chung_lu_naive(benchmark::State& state) {
    ChungLuParams p = chung_lu_params(state.range(0), 2.5);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        Graph g = sample_chung_lu_naive(p, RngStream{2, trial++});
        benchmark::DoNotOptimize(g.m_edges());
    }
}
BENCHMARK(BM_chung_lu_naive)->Arg(1000)->Arg(4000);

void BM_chung_lu_skipping(benchmark::State& state) {
    ChungLuParams p = chung_lu_params(state.range(0), 2.5);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        Graph g = sample_chung_lu_skipping(p, RngStream{2, trial++});
        benchmark::DoNotOptimize(g.m_edges());
    }
}
BENCHMARK(BM_chung_lu_skipping)->Arg(1000)->Arg(4000)->Arg(50000);

void BM_exact_expectation(benchmark::State& state) {
    Graph g = clique_core_pendants_graph(5, 8);  // 13 edges -> 8192 subsets
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_expectation(g, 0.3, {0, 5}));
    }
}
BENCHMARK(BM_exact_expectation);

} // namespace

BENCHMARK_MAIN();
