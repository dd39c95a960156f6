#include <benchmark/benchmark.h>

#include "monosync/classify.hpp"
#include "monosync/families.hpp"
#include "monosync/reductions.hpp"
#include "monosync/road_coloring.hpp"
#include "monosync/sampling.hpp"
#include "monosync/sync_oracle.hpp"
#include "monosync/sync_poly.hpp"

using namespace monosync;

namespace {

void BM_SyncPairs(benchmark::State& state) {
    const auto a = sample_monotonic(static_cast<int>(state.range(0)), 3, 42);
    for (auto _ : state) benchmark::DoNotOptimize(sync_pairs(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SyncPairs)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_PolyShortestWord(benchmark::State& state) {
    const auto fam = ternary_family(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(shortest_sync_word_monotonic(fam.automaton, fam.subset));
}
BENCHMARK(BM_PolyShortestWord)->DenseRange(2, 10, 2);

void BM_OracleShortestWord(benchmark::State& state) {
    const auto fam = ternary_family(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_shortest_sync_word(fam.automaton, fam.subset));
}
BENCHMARK(BM_OracleShortestWord)->DenseRange(2, 10, 2);

void BM_OracleCarefulCounter(benchmark::State& state) {
    const auto inst = counter_partial(static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_careful_sync(inst.automaton));
}
BENCHMARK(BM_OracleCarefulCounter)->DenseRange(1, 4, 1);

void BM_CounterIntersection(benchmark::State& state) {
    const auto counters = counter_acceptors(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_intersection(counters.acceptors));
}
BENCHMARK(BM_CounterIntersection)->DenseRange(1, 5, 1);

void BM_FindMonotonicOrder(benchmark::State& state) {
    const auto fam = ternary_family(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_monotonic_order(fam.automaton));
}
BENCHMARK(BM_FindMonotonicOrder)->DenseRange(1, 4, 1);

void BM_RankReduction(benchmark::State& state) {
    const Cnf cnf{3, {{1, -2, 3}, {-1, 2}, {2, -3}}};
    OracleBudget wide;
    wide.max_states = 64;
    for (auto _ : state) {
        const auto inst = max3sat_to_rank(cnf);
        benchmark::DoNotOptimize(oracle_rank(inst.automaton, inst.subset, wide));
    }
}
BENCHMARK(BM_RankReduction);

void BM_PeriodPartition(benchmark::State& state) {
    // rejection sampling only stays practical while n is small
    std::mt19937_64 rng(7);
    const auto g =
        sample_strongly_connected_digraph(static_cast<int>(state.range(0)), 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(period_partition(g));
}
BENCHMARK(BM_PeriodPartition)->DenseRange(4, 16, 4);

void BM_GenPairwiseGap(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pairwise_gap_family(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenPairwiseGap)->DenseRange(1, 6, 1);

}  // namespace

BENCHMARK_MAIN();
