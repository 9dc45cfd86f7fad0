#include <benchmark/benchmark.h>

#include <memory>

#include "endorsim/endorsim.hpp"

using namespace endorsim;

static void BM_ComputePatternMatrix(benchmark::State& state) {
  TerminationSpec term;
  term.max_iterations = 1000;
  auto g = std::make_shared<const Graph>(generate_base(preset("linkedin"), term, 2).graph);
  const auto skills = static_cast<std::size_t>(state.range(0));
  SquareMatrix diag(skills);
  for (std::size_t i = 0; i < skills; ++i) diag(i, i) = 0.5;
  Rng rng(1);
  const EndorsementSet d = random_init(g, PatternMatrix(diag), rng);
  for (auto _ : state) benchmark::DoNotOptimize(compute_pattern_matrix(d));
}
BENCHMARK(BM_ComputePatternMatrix)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_Diameter(benchmark::State& state) {
  TerminationSpec term;
  term.max_iterations = static_cast<std::uint64_t>(state.range(0));
  const Graph g = generate_base(preset("linkedin"), term, 2).graph;
  state.counters["nodes"] = static_cast<double>(g.vertex_count());
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
}
BENCHMARK(BM_Diameter)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
