#include <benchmark/benchmark.h>

#include "ramsey/arrowing.hpp"
#include "ramsey/graph.hpp"

using namespace ramsey;

static void BM_ArrowsDiagonal(benchmark::State& state) {
  Graph host = completeGraph(static_cast<int>(state.range(0)));
  TargetTuple t = cyclesAndCliques(0, 2, 4, 3);
  for (auto _ : state) {
    ArrowReport r = arrows(host, t);
    benchmark::DoNotOptimize(r.arrows);
  }
}
BENCHMARK(BM_ArrowsDiagonal)->Arg(5)->Arg(6);

static void BM_ArrowsCliqueTree(benchmark::State& state) {
  Graph host = completeGraph(7);
  TargetTuple t;
  t.targets = {Target::clique(static_cast<int>(state.range(0))), Target::tree(pathGraph(3))};
  for (auto _ : state) {
    ArrowReport r = arrows(host, t);
    benchmark::DoNotOptimize(r.arrows);
  }
}
BENCHMARK(BM_ArrowsCliqueTree)->Arg(3)->Arg(4);

static void BM_ArrowsCliqueCycle(benchmark::State& state) {
  Graph host = completeGraph(static_cast<int>(state.range(0)));
  TargetTuple t = cyclesAndCliques(1, 1, 4, 3);
  for (auto _ : state) {
    ArrowReport r = arrows(host, t);
    benchmark::DoNotOptimize(r.arrows);
  }
}
BENCHMARK(BM_ArrowsCliqueCycle)->Arg(6)->Arg(7);

static void BM_MinimalK6(benchmark::State& state) {
  Graph host = completeGraph(6);
  TargetTuple t = cyclesAndCliques(0, 2, 4, 3);
  for (auto _ : state) {
    MinimalReport r = isRamseyMinimal(host, t);
    benchmark::DoNotOptimize(r.minimal);
  }
}
BENCHMARK(BM_MinimalK6);

BENCHMARK_MAIN();
