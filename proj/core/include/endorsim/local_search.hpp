#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "endorsim/endorsement_set.hpp"
#include "endorsim/graph.hpp"
#include "endorsim/pattern.hpp"
#include "endorsim/random.hpp"

namespace endorsim {

inline constexpr double kDefaultThreshold = 1e-5;
inline constexpr std::uint64_t kDefaultStallLimit = 500;
inline constexpr std::uint64_t kDefaultMaxIterations = 1'000'000;
inline constexpr std::uint64_t kGreedyPatience = 50;

struct SearchOptions {
  double threshold = kDefaultThreshold;         // stop once delta <= threshold
  std::uint64_t stall_limit = kDefaultStallLimit;  // consecutive non-improving trials
  std::uint64_t max_iterations = kDefaultMaxIterations;
};

enum class SearchStatus { ThresholdReached, Stalled, BudgetExhausted };

std::string_view to_string(SearchStatus status) noexcept;

struct TracePoint {
  std::uint64_t iteration = 0;
  double delta = 0.0;
};

// Objective after initialization (iteration 0) and after every accepted move.
struct ConvergenceTrace {
  std::vector<TracePoint> points;
  SearchStatus status = SearchStatus::Stalled;
};

struct SearchResult {
  EndorsementSet endorsements;
  ConvergenceTrace trace;
  double delta = 0.0;
  std::uint64_t iterations = 0;
  unsigned run = 0;  // restart index that produced this result
};

/// For each skill, adds randomly oriented random base edges until the endorsed
/// fraction first reaches the target diagonal entry or every arc has been tried.
EndorsementSet random_init(std::shared_ptr<const Graph> graph, const PatternMatrix& target, Rng& rng);

/// Draws uniform random edges and commits the (orientation, skill) placement
/// that minimizes rho, if it strictly improves on leaving the edge unused.
/// Stops at the threshold or after kGreedyPatience consecutive useless draws.
EndorsementSet greedy_init(std::shared_ptr<const Graph> graph, const PatternMatrix& target,
                           const WeightMatrix& weights, Rng& rng, double threshold = kDefaultThreshold);

/// Randomized insert/delete local search with strict-improvement acceptance.
/// Each trial picks a uniform skill and a uniform action. Insert draws a base
/// edge and an orientation; Delete draws an existing arc of that skill.
SearchResult local_search(const PatternMatrix& target, const WeightMatrix& weights, EndorsementSet init,
                          const SearchOptions& options, Rng& rng);

enum class InitKind { Greedy, Random };

struct SolveOptions {
  SearchOptions search;
  InitKind init = InitKind::Greedy;
  unsigned restarts = 0;  // extra runs from fresh initializations
};

// Runs 1 + restarts independent searches (stream r seeded from (seed, r)) and
// keeps the lowest delta, stopping early once a run reaches the threshold.
SearchResult solve_endorsements(std::shared_ptr<const Graph> graph, const PatternMatrix& target,
                                const WeightMatrix& weights, const SolveOptions& options, std::uint64_t seed);

// CSV with header `iter,delta`.
std::string trace_to_csv(const ConvergenceTrace& trace);
// Inverse of trace_to_csv; the stop status is not stored and reads back as Stalled.
ConvergenceTrace parse_trace_csv(std::string_view text);

}  // namespace endorsim
