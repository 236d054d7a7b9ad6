#include <benchmark/benchmark.h>

#include <multipark/activity.hpp>
#include <multipark/bijection.hpp>
#include <multipark/enumerate.hpp>
#include <multipark/graph.hpp>
#include <multipark/orders.hpp>
#include <multipark/tutte.hpp>

using namespace multipark;

namespace {

Graph h11() {
    return Graph(11, {{1, 3}, {1, 4}, {3, 8}, {4, 7}, {6, 7}, {7, 9}, {2, 5}, {2, 10}, {5, 11},
                      {3, 4}, {4, 8}, {7, 8}, {6, 9}, {5, 10}, {10, 11}});
}

void BM_TutteDc(benchmark::State& state) {
    Graph g = Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tutte_dc(g));
}
BENCHMARK(BM_TutteDc)->Arg(5)->Arg(6);

void BM_TutteActivities(benchmark::State& state) {
    Graph g = Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tutte_activities(g));
}
BENCHMARK(BM_TutteActivities)->Arg(5);

void BM_BfsForest(benchmark::State& state) {
    Graph g = h11();
    for (auto _ : state) benchmark::DoNotOptimize(bfs_forest(g));
}
BENCHMARK(BM_BfsForest);

void BM_PhiPsiRoundTrip(benchmark::State& state) {
    Graph g = Graph::complete(5);
    ChoiceRule gamma = ChoiceRule::bfsq();
    RootedForest F = bfs_forest(g).forest;
    VertexFunction f = psi(g, gamma, F).f;
    for (auto _ : state) {
        PhiResult forward = phi(g, gamma, f);
        benchmark::DoNotOptimize(psi(g, gamma, forward.forest));
    }
}
BENCHMARK(BM_PhiPsiRoundTrip);

void BM_SpanningForestSweep(benchmark::State& state) {
    Graph g = Graph::complete(5);
    for (auto _ : state) benchmark::DoNotOptimize(spanning_forests(g, 10));
}
BENCHMARK(BM_SpanningForestSweep);

}  // namespace

BENCHMARK_MAIN();
