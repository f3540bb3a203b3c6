#include <benchmark/benchmark.h>

#include "balance/balanced_search.hpp"
#include "balance/constructions.hpp"
#include "balance/extremal.hpp"
#include "balance/graph.hpp"
#include "balance/oracles.hpp"

using namespace balance;

namespace {

SmallGraph cycle(int m) { return make_named({NamedGraph::Kind::Cycle, m, {}}); }

void BM_find_balanced_copy(benchmark::State& state) {
    const ListColoring c = clique_split_coloring(static_cast<int>(state.range(0)), 6);
    const SmallGraph c6 = cycle(6);
    for (auto _ : state) benchmark::DoNotOptimize(find_balanced_copy(c, c6, {}));
}
BENCHMARK(BM_find_balanced_copy)->Arg(12)->Arg(16)->Arg(20);

void BM_find_balanced_none(benchmark::State& state) {
    const ListColoring c = split_coloring_c4k(static_cast<int>(state.range(0)), 2);
    const SmallGraph c8 = cycle(8);
    for (auto _ : state) benchmark::DoNotOptimize(find_balanced_copy(c, c8, {}));
}
BENCHMARK(BM_find_balanced_none)->Arg(10)->Arg(12);

void BM_ex_exact(benchmark::State& state) {
    const FamilySpec fam = c3c4c5();
    for (auto _ : state) benchmark::DoNotOptimize(ex_exact(static_cast<int>(state.range(0)), fam));
}
BENCHMARK(BM_ex_exact)->Arg(6)->Arg(7)->Arg(8);

void BM_girth(benchmark::State& state) {
    const auto g = girth6_graph(30, 30, 1);
    for (auto _ : state) benchmark::DoNotOptimize(girth(*g));
}
BENCHMARK(BM_girth);

void BM_bal_exact(benchmark::State& state) {
    const SmallGraph c4 = cycle(4);
    for (auto _ : state) benchmark::DoNotOptimize(bal_exact(5, c4));
}
BENCHMARK(BM_bal_exact);

}  // namespace

BENCHMARK_MAIN();
