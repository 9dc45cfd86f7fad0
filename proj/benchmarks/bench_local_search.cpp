#include <benchmark/benchmark.h>

#include <memory>

#include "endorsim/endorsim.hpp"

using namespace endorsim;

namespace {

std::shared_ptr<const Graph> base_graph() {
  static const auto g = [] {
    TerminationSpec term;
    term.max_iterations = 1000;
    return std::make_shared<const Graph>(generate_base(preset("linkedin"), term, 2).graph);
  }();
  return g;
}

PatternMatrix realizable_target(std::size_t skills, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.35, 0.65);
  SquareMatrix diag(skills);
  for (std::size_t i = 0; i < skills; ++i) diag(i, i) = u(rng);
  return compute_pattern_matrix(random_init(base_graph(), PatternMatrix(diag), rng));
}

}  // namespace

static void BM_SolveRealizable(benchmark::State& state) {
  const auto skills = static_cast<std::size_t>(state.range(0));
  const PatternMatrix target = realizable_target(skills, 7);
  const auto w = WeightMatrix::diagonal_emphasis(skills);
  SolveOptions opt;
  opt.init = InitKind::Random;
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_endorsements(base_graph(), target, w, opt, seed++).delta);
}
BENCHMARK(BM_SolveRealizable)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_GreedyInit(benchmark::State& state) {
  const PatternMatrix target = realizable_target(5, 8);
  const auto w = WeightMatrix::diagonal_emphasis(5);
  Rng rng(9);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_init(base_graph(), target, w, rng).total_arcs());
}
BENCHMARK(BM_GreedyInit)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
