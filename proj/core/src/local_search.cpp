#include "endorsim/local_search.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <system_error>

#include "endorsim/error.hpp"
#include "incremental_pattern.hpp"

namespace endorsim {

std::string_view to_string(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::ThresholdReached: return "threshold-reached";
    case SearchStatus::Stalled: return "stalled";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

void check_target(const PatternMatrix& target) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    const double m = target(i, i);
    if (m < 0.0 || m > 1.0) throw ValidationError("target diagonal entries must lie in [0, 1]");
  }
}

}  // namespace

EndorsementSet random_init(std::shared_ptr<const Graph> graph, const PatternMatrix& target, Rng& rng) {
  check_target(target);
  EndorsementSet config(graph, target.size());
  const auto edges = graph->edges();
  const double vertices = static_cast<double>(graph->vertex_count());
  // Arc k is edge k / 2 oriented by k % 2; a lazy Fisher-Yates shuffle visits
  // each arc at most once.
  std::vector<std::uint64_t> order(2 * edges.size());
  for (Skill s = 0; s < target.size(); ++s) {
    for (std::uint64_t k = 0; k < order.size(); ++k) order[k] = k;
    std::size_t endorsed = 0;
    for (std::size_t taken = 0; taken < order.size(); ++taken) {
      if (static_cast<double>(endorsed) >= target(s, s) * vertices) break;
      std::uniform_int_distribution<std::size_t> pick(taken, order.size() - 1);
      std::swap(order[taken], order[pick(rng)]);
      const Edge& e = edges[order[taken] / 2];
      const bool forward = order[taken] % 2 == 0;
      const Vertex from = forward ? e.u : e.v;
      const Vertex to = forward ? e.v : e.u;
      const bool was_endorsed = config.endorsed(s, to);
      config.add_arc(s, from, to);
      if (!was_endorsed) ++endorsed;
    }
  }
  return config;
}

EndorsementSet greedy_init(std::shared_ptr<const Graph> graph, const PatternMatrix& target,
                           const WeightMatrix& weights, Rng& rng, double threshold) {
  check_target(target);
  EndorsementSet config(graph, target.size());
  const auto edges = graph->edges();
  if (edges.empty() || target.size() == 0) return config;

  detail::IncrementalPattern state(config, target, weights);
  std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1);
  std::uint64_t useless = 0;
  while (state.delta() > threshold && useless < kGreedyPatience) {
    const Edge& e = edges[pick_edge(rng)];
    double best = state.rho();  // the no-op
    Skill best_skill = 0;
    Arc best_arc{};
    bool found = false;
    for (Skill s = 0; s < target.size(); ++s) {
      for (const Arc arc : {Arc{e.u, e.v}, Arc{e.v, e.u}}) {
        // Arcs into an already endorsed vertex leave the matrix unchanged.
        if (state.member(s, arc.to)) continue;
        const double r = state.rho_if_flipped(s, arc.to);
        if (r < best) {
          best = r;
          best_skill = s;
          best_arc = arc;
          found = true;
        }
      }
    }
    if (found) {
      config.add_arc(best_skill, best_arc.from, best_arc.to);
      state.flip(best_skill, best_arc.to);
      useless = 0;
    } else {
      ++useless;
    }
  }
  return config;
}

SearchResult local_search(const PatternMatrix& target, const WeightMatrix& weights, EndorsementSet init,
                          const SearchOptions& options, Rng& rng) {
  const Graph& graph = init.base();
  check_target(target);
  const std::size_t n = init.skill_count();
  detail::IncrementalPattern state(init, target, weights);

  SearchResult result{std::move(init), {}, 0.0, 0};
  EndorsementSet& config = result.endorsements;
  ConvergenceTrace& trace = result.trace;
  trace.points.push_back({0, state.delta()});

  const auto edges = graph.edges();
  std::uniform_int_distribution<std::size_t> pick_skill(0, n == 0 ? 0 : n - 1);
  std::bernoulli_distribution coin(0.5);
  std::uint64_t stall = 0;
  std::uint64_t iteration = 0;

  for (;;) {
    if (state.delta() <= options.threshold) {
      trace.status = SearchStatus::ThresholdReached;
      break;
    }
    if (stall >= options.stall_limit || n == 0) {
      trace.status = SearchStatus::Stalled;
      break;
    }
    if (iteration >= options.max_iterations) {
      trace.status = SearchStatus::BudgetExhausted;
      break;
    }
    ++iteration;
    ++stall;

    const auto s = static_cast<Skill>(pick_skill(rng));
    if (coin(rng)) {  // Insert
      if (edges.empty()) continue;
      const Edge& e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      const bool forward = coin(rng);
      const Vertex from = forward ? e.u : e.v;
      const Vertex to = forward ? e.v : e.u;
      if (config.has_arc(s, from, to) || state.member(s, to)) continue;
      if (state.rho_if_flipped(s, to) >= state.rho()) continue;
      config.add_arc(s, from, to);
      state.flip(s, to);
    } else {  // Delete
      const auto arcs = config.arcs(s);
      if (arcs.empty()) continue;
      const Arc arc = arcs[std::uniform_int_distribution<std::size_t>(0, arcs.size() - 1)(rng)];
      // The endorsee stays endorsed through another arc: matrix unchanged.
      if (config.in_degree(s, arc.to) > 1) continue;
      if (state.rho_if_flipped(s, arc.to) >= state.rho()) continue;
      config.remove_arc(s, arc.from, arc.to);
      state.flip(s, arc.to);
    }
    stall = 0;
    trace.points.push_back({iteration, state.delta()});
  }

  state.resync();
  result.delta = state.delta();
  result.iterations = iteration;
  return result;
}

SearchResult solve_endorsements(std::shared_ptr<const Graph> graph, const PatternMatrix& target,
                                const WeightMatrix& weights, const SolveOptions& options, std::uint64_t seed) {
  std::optional<SearchResult> best;
  for (unsigned r = 0; r <= options.restarts; ++r) {
    Rng rng = derived_rng(seed, r);
    EndorsementSet init = options.init == InitKind::Greedy
                              ? greedy_init(graph, target, weights, rng, options.search.threshold)
                              : random_init(graph, target, rng);
    SearchResult run = local_search(target, weights, std::move(init), options.search, rng);
    run.run = r;
    if (!best || run.delta < best->delta) best = std::move(run);
    if (best->trace.status == SearchStatus::ThresholdReached) break;
  }
  return std::move(*best);
}

std::string trace_to_csv(const ConvergenceTrace& trace) {
  std::string out = "iter,delta\n";
  char buf[64];
  for (const TracePoint& p : trace.points) {
    out += std::to_string(p.iteration);
    out += ',';
    auto r = std::to_chars(buf, buf + sizeof buf, p.delta);
    out.append(buf, r.ptr);
    out += '\n';
  }
  return out;
}

ConvergenceTrace parse_trace_csv(std::string_view text) {
  ConvergenceTrace trace;
  std::size_t line_no = 0;
  bool header = true;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    ++line_no;
    if (line.empty()) continue;
    if (header) {
      if (line != "iter,delta") throw ParseError(line_no, "expected header 'iter,delta'");
      header = false;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError(line_no, "expected 2 fields");
    const std::string_view a = line.substr(0, comma);
    const std::string_view b = line.substr(comma + 1);
    TracePoint p;
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), p.iteration);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), p.delta);
    if (r1.ec != std::errc{} || r1.ptr != a.data() + a.size() || r2.ec != std::errc{} ||
        r2.ptr != b.data() + b.size()) {
      throw ParseError(line_no, "malformed trace row '" + std::string(line) + "'");
    }
    trace.points.push_back(p);
  }
  if (header) throw ParseError(line_no, "missing trace header");
  return trace;
}

}  // namespace endorsim
