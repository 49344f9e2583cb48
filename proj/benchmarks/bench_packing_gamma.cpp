#include <benchmark/benchmark.h>

#include "ramsey/hypergraph.hpp"
#include "ramsey/packing.hpp"

using namespace ramsey;

static void BM_ComputePMixed(benchmark::State& state) {
  for (auto _ : state) {
    PackingResult r = computeP(1, 1, 2, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r.outcome);
  }
}
BENCHMARK(BM_ComputePMixed)->Arg(4)->Arg(5);

static void BM_ComputePTwoCliques(benchmark::State& state) {
  for (auto _ : state) {
    PackingResult r = computeP(0, 2, 2, 4);
    benchmark::DoNotOptimize(r.outcome);
  }
}
BENCHMARK(BM_ComputePTwoCliques);

static void BM_SampleHypergraph(benchmark::State& state) {
  GammaParams p;
  p.n = static_cast<int>(state.range(0));
  p.h = 3;
  p.cycleLen = 4;
  p.A = 1.0;
  p.seed = 1;
  for (auto _ : state) {
    HyperGraph hg = sampleHypergraph(p);
    benchmark::DoNotOptimize(hg.edgeCount());
  }
}
BENCHMARK(BM_SampleHypergraph)->Arg(200)->Arg(500);

static void BM_CleanShortCycles(benchmark::State& state) {
  GammaParams p;
  p.n = static_cast<int>(state.range(0));
  p.h = 3;
  p.cycleLen = 4;
  p.A = 1.0;
  p.seed = 1;
  HyperGraph hg = sampleHypergraph(p);
  for (auto _ : state) {
    HyperGraph clean = removeShortCycles(hg, 4);
    benchmark::DoNotOptimize(clean.edgeCount());
  }
}
BENCHMARK(BM_CleanShortCycles)->Arg(200)->Arg(500);

BENCHMARK_MAIN();
