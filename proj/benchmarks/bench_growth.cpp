#include <benchmark/benchmark.h>

#include "endorsim/endorsim.hpp"

using namespace endorsim;

static void BM_GenerateLinkedIn(benchmark::State& state) {
  TerminationSpec term;
  term.max_iterations = static_cast<std::uint64_t>(state.range(0));
  std::size_t nodes = 0;
  for (auto _ : state) {
    const GrowthResult r = generate_base(preset("linkedin"), term, 2);
    nodes += r.graph.vertex_count();
  }
  state.counters["nodes/run"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_GenerateLinkedIn)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_PreferentialTarget(benchmark::State& state) {
  TerminationSpec term;
  term.max_iterations = 300;
  const Graph g = generate_base(preset("linkedin"), term, 2).graph;
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(preferential_target(g, 0, rng));
}
BENCHMARK(BM_PreferentialTarget);

static void BM_SampleSleep(benchmark::State& state) {
  const GrowthParams p = preset("flickr");
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(sample_sleep(5, p, rng));
}
BENCHMARK(BM_SampleSleep);

BENCHMARK_MAIN();
