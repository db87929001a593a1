#include "hurwitz/cutjoin.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/spectral.hpp"
#include "hurwitz/surfaces.hpp"

#include <benchmark/benchmark.h>

using namespace hurwitz;

static void BM_OracleCycle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int g = static_cast<int>(state.range(1));
    OracleOptions opts;
    opts.threads = static_cast<unsigned>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz_poly(n, g, opts));
    state.counters["leaves"] = FactorizationTask::cycle(n, g).leaf_count().get_d();
}
BENCHMARK(BM_OracleCycle)->Args({3, 2, 1})->Args({4, 1, 1})->Args({5, 1, 1})->Args({5, 1, 4})->Unit(benchmark::kMillisecond);

static void BM_RPart(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(R_part(g, n));
}
BENCHMARK(BM_RPart)->Args({1, 5})->Args({2, 5})->Args({2, 6})->Args({3, 5})->Unit(benchmark::kMillisecond);

static void BM_TreePoly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto method = state.range(1) ? TreeMethod::pruefer : TreeMethod::kirchhoff;
    for (auto _ : state) benchmark::DoNotOptimize(tree_poly(n, method));
}
BENCHMARK(BM_TreePoly)->Args({5, 0})->Args({5, 1})->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

static void BM_RotationCensus(benchmark::State& state) {
    const auto g = MultiGraph::parse(state.range(0) ? "1-1;1-1;1-1;1-1" : "1-2;1-2;1-2;2-3;2-3;1-3");
    for (auto _ : state) benchmark::DoNotOptimize(embedding_census(g));
}
BENCHMARK(BM_RotationCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CutJoin(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_cutjoin(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}
BENCHMARK(BM_CutJoin)->Args({3, 4})->Args({4, 5})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
