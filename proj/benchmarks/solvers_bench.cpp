#include <benchmark/benchmark.h>

#include "compnum/bounds.hpp"
#include "compnum/cliques.hpp"
#include "compnum/competition.hpp"
#include "compnum/cover.hpp"
#include "compnum/generators.hpp"

namespace {

using namespace compnum;

void BM_MaximalCliques(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? dodecahedron() : icosahedron();
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(BM_MaximalCliques)->Arg(0)->Arg(1);

void BM_ThetaEdgeIcosahedron(benchmark::State& state) {
  const Graph g = icosahedron();
  for (auto _ : state) benchmark::DoNotOptimize(theta_edge(g).value);
}
BENCHMARK(BM_ThetaEdgeIcosahedron)->Unit(benchmark::kMicrosecond);

void BM_SubsetBoundIcosahedron(benchmark::State& state) {
  const Graph g = icosahedron();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subset_bound(g, m).value);
}
BENCHMARK(BM_SubsetBoundIcosahedron)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_HeuristicIcosahedron(benchmark::State& state) {
  const Graph g = icosahedron();
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_upper_bound(g).k);
}
BENCHMARK(BM_HeuristicIcosahedron)->Unit(benchmark::kMicrosecond);

// Search without bounds so the timing reflects the placement search itself.
void BM_ExactUnaided(benchmark::State& state) {
  const int part = static_cast<int>(state.range(0));
  const Graph g = complete_multipartite_graph({part, part, part});
  ExactBudget budget;
  budget.use_bounds = false;
  for (auto _ : state) {
    ExactResult r = exact_competition_number(g, budget);
    benchmark::DoNotOptimize(r.upper);
    state.counters["nodes"] = static_cast<double>(r.nodes);
  }
}
BENCHMARK(BM_ExactUnaided)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ExactCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  ExactBudget budget;
  budget.use_bounds = false;
  for (auto _ : state) benchmark::DoNotOptimize(exact_competition_number(g, budget).upper);
}
BENCHMARK(BM_ExactCycle)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
