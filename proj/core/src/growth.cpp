#include "endorsim/growth.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <queue>
#include <utility>

#include "endorsim/error.hpp"

namespace endorsim {

ArrivalFunction ArrivalFunction::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) throw ParameterError("arrival polynomial needs at least one coefficient");
  for (double c : coefficients) {
    if (!std::isfinite(c)) throw ParameterError("arrival polynomial coefficient is not finite");
  }
  return ArrivalFunction(Kind::Polynomial, std::move(coefficients));
}

ArrivalFunction ArrivalFunction::exponential(double scale, double rate) {
  if (!std::isfinite(scale) || !std::isfinite(rate)) {
    throw ParameterError("arrival exponential parameters must be finite");
  }
  return ArrivalFunction(Kind::Exponential, {scale, rate});
}

double ArrivalFunction::operator()(double months) const noexcept {
  double value = 0.0;
  if (kind_ == Kind::Polynomial) {
    for (double c : coefficients_) value = value * months + c;  // Horner
  } else {
    value = coefficients_[0] * std::exp(coefficients_[1] * months);
  }
  return value > 0.0 ? value : 0.0;
}

void GrowthParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ParameterError("beta must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParameterError("lambda must be positive");
}

namespace {

struct NamedPreset {
  std::string_view name;
  GrowthParams (*make)();
};

const std::array<NamedPreset, 4> kPresets{{
    {"flickr", [] { return GrowthParams{ArrivalFunction::exponential(1.0, 0.25), 0.84, 0.002, 0.0092}; }},
    {"delicious",
     [] { return GrowthParams{ArrivalFunction::polynomial({16, 3000, 40000}), 0.92, 0.00032, 0.0052}; }},
    {"answers",
     [] { return GrowthParams{ArrivalFunction::polynomial({-4544, 160000, -2500}), 0.85, 0.0038, 0.0019}; }},
    {"linkedin",
     [] { return GrowthParams{ArrivalFunction::polynomial({3900, 76000, -130000}), 0.78, 0.00036, 0.0018}; }},
}};

const std::array<std::string_view, 4> kPresetNames{"flickr", "delicious", "answers", "linkedin"};

}  // namespace

GrowthParams preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p.make();
  }
  throw ValidationError("unknown preset '" + std::string(name) +
                        "' (expected flickr, delicious, answers or linkedin)");
}

std::span<const std::string_view> preset_names() noexcept { return kPresetNames; }

void TerminationSpec::validate() const {
  if (!max_clock && !max_iterations && !max_nodes) {
    throw ValidationError("termination needs at least one of max clock, iterations or nodes");
  }
  if (max_clock && !(*max_clock >= 0.0)) throw ValidationError("max clock must be nonnegative");
}

std::string_view to_string(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::Clique: return "clique";
    case EventKind::Wake: return "wake";
    case EventKind::Expire: return "expire";
    case EventKind::Arrive: return "arrive";
  }
  return "?";
}

std::string_view to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::IterationLimit: return "iteration-limit";
    case StopReason::NodeLimit: return "node-limit";
    case StopReason::ClockLimit: return "clock-limit";
    case StopReason::QueueExhausted: return "queue-exhausted";
  }
  return "?";
}

double sample_lifetime(const GrowthParams& params, Rng& rng) {
  if (!(params.lambda > 0.0)) throw ParameterError("lambda must be positive");
  return std::exponential_distribution<double>(params.lambda)(rng);
}

double sample_sleep(std::size_t degree, const GrowthParams& params, Rng& rng) {
  if (!(params.alpha > 0.0 && params.alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (!(params.beta > 0.0)) throw ParameterError("beta must be positive");
  const double d = degree == 0 ? 1.0 : static_cast<double>(degree);
  return std::gamma_distribution<double>(1.0 - params.alpha, 1.0 / (params.beta * d))(rng);
}

std::uint64_t arrivals_between(double t0, double t1, const GrowthParams& params, Rng& rng) {
  if (t1 < t0) throw ValidationError("arrival interval must satisfy t0 <= t1");
  const double mean = params.arrival(t0 / kDaysPerMonth) / kDaysPerMonth * (t1 - t0);
  if (!(mean > 0.0)) return 0;
  return static_cast<std::uint64_t>(std::poisson_distribution<std::int64_t>(mean)(rng));
}

std::optional<Edge> close_two_hop(Graph& g, Vertex u, Rng& rng) {
  const auto nu = g.neighbors(u);
  if (nu.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick_mid(0, nu.size() - 1);
  for (int attempt = 0; attempt < kTwoHopRetries; ++attempt) {
    const Vertex mid = nu[pick_mid(rng)];
    // Uniform choice among mid's neighbors that are neither u nor adjacent to u.
    std::optional<Vertex> chosen;
    std::size_t seen = 0;
    for (Vertex w : g.neighbors(mid)) {
      if (w == u || g.has_edge(u, w)) continue;
      ++seen;
      if (std::uniform_int_distribution<std::size_t>(0, seen - 1)(rng) == 0) chosen = w;
    }
    if (chosen) {
      g.add_edge(u, *chosen);
      return Edge{std::min(u, *chosen), std::max(u, *chosen)};
    }
  }
  return std::nullopt;
}

Vertex preferential_target(const Graph& g, Vertex exclude, Rng& rng) {
  const auto edges = g.edges();
  // Every edge has an endpoint other than `exclude`, so one edge suffices.
  if (edges.empty()) throw ValidationError("preferential attachment needs a vertex with positive degree");
  std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1);
  std::bernoulli_distribution pick_side(0.5);
  for (;;) {
    const Edge& e = edges[pick_edge(rng)];
    const Vertex w = pick_side(rng) ? e.u : e.v;
    if (w != exclude) return w;
  }
}

GrowthResult generate_base(const GrowthParams& params, const TerminationSpec& term, std::uint64_t seed) {
  params.validate();
  term.validate();

  Rng rng(seed);
  GrowthResult out;
  Graph& g = out.graph;
  std::vector<NodeState> nodes;

  using Entry = std::pair<double, Vertex>;  // (wake time, id): ties break by id
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  g = Graph::complete(kInitialCliqueSize);
  for (const Edge& e : g.edges()) out.events.push_back({0.0, EventKind::Clique, e.u, e.v});
  for (Vertex v = 0; v < kInitialCliqueSize; ++v) {
    NodeState s{v, sample_lifetime(params, rng), 0.0};
    s.wake_time = sample_sleep(g.degree(v), params, rng);
    nodes.push_back(s);
    queue.emplace(s.wake_time, v);
  }

  double clock = 0.0;
  for (;;) {
    if (term.max_iterations && out.iterations >= *term.max_iterations) {
      out.stop = StopReason::IterationLimit;
      break;
    }
    if (term.max_nodes && g.vertex_count() >= *term.max_nodes) {
      out.stop = StopReason::NodeLimit;
      break;
    }
    if (queue.empty()) {
      out.stop = StopReason::QueueExhausted;
      break;
    }
    if (term.max_clock && queue.top().first > *term.max_clock) {
      out.stop = StopReason::ClockLimit;
      break;
    }

    const auto [wake, u] = queue.top();
    queue.pop();
    const double previous = clock;
    clock = wake;
    ++out.iterations;

    if (clock <= nodes[u].death_time) {
      const auto edge = close_two_hop(g, u, rng);
      std::optional<Vertex> peer;
      if (edge) peer = edge->u == u ? edge->v : edge->u;
      out.events.push_back({clock, EventKind::Wake, u, peer});
      nodes[u].wake_time = clock + sample_sleep(g.degree(u), params, rng);
      queue.emplace(nodes[u].wake_time, u);
    } else {
      out.events.push_back({clock, EventKind::Expire, u, std::nullopt});
    }

    const std::uint64_t arrivals = arrivals_between(previous, clock, params, rng);
    for (std::uint64_t k = 0; k < arrivals; ++k) {
      const Vertex v = g.add_vertex();
      const Vertex w = preferential_target(g, v, rng);
      g.add_edge(v, w);
      out.events.push_back({clock, EventKind::Arrive, v, w});
      NodeState s{v, clock + sample_lifetime(params, rng), 0.0};
      s.wake_time = clock + sample_sleep(g.degree(v), params, rng);
      nodes.push_back(s);
      queue.emplace(s.wake_time, v);
    }
  }
  out.clock = clock;
  return out;
}

std::string event_log_csv(std::span<const Event> events) {
  std::string out = "t,event,node,peer\n";
  char buf[64];
  for (const Event& e : events) {
    auto r = std::to_chars(buf, buf + sizeof buf, e.time);
    out.append(buf, r.ptr);
    out += ',';
    out += to_string(e.kind);
    out += ',';
    out += std::to_string(e.node);
    out += ',';
    if (e.peer) out += std::to_string(*e.peer);
    out += '\n';
  }
  return out;
}

namespace {

EventKind parse_kind(std::string_view s, std::size_t line) {
  for (EventKind k : {EventKind::Clique, EventKind::Wake, EventKind::Expire, EventKind::Arrive}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError(line, "unknown event kind '" + std::string(s) + "'");
}

template <typename T>
T parse_number(std::string_view s, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "malformed number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::vector<Event> parse_event_log_csv(std::string_view text) {
  std::vector<Event> events;
  std::size_t line_no = 0;
  bool header = true;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    ++line_no;
    if (line.empty()) continue;
    if (header) {
      if (line != "t,event,node,peer") throw ParseError(line_no, "expected header 't,event,node,peer'");
      header = false;
      continue;
    }
    std::array<std::string_view, 4> f;
    for (std::size_t i = 0; i < 4; ++i) {
      const std::size_t comma = line.find(',');
      if (i < 3 && comma == std::string_view::npos) throw ParseError(line_no, "expected 4 fields");
      f[i] = line.substr(0, comma);
      line.remove_prefix(comma == std::string_view::npos ? line.size() : comma + 1);
    }
    Event e;
    e.time = parse_number<double>(f[0], line_no);
    e.kind = parse_kind(f[1], line_no);
    e.node = parse_number<Vertex>(f[2], line_no);
    if (!f[3].empty()) e.peer = parse_number<Vertex>(f[3], line_no);
    events.push_back(e);
  }
  if (header) throw ParseError(line_no, "missing event log header");
  return events;
}

Graph replay_events(std::span<const Event> events) {
  Graph g;
  auto ensure = [&g](Vertex v) {
    while (g.vertex_count() <= v) g.add_vertex();
  };
  for (const Event& e : events) {
    ensure(e.node);
    if (e.peer && e.kind != EventKind::Expire) {
      ensure(*e.peer);
      g.add_edge(e.node, *e.peer);
    }
  }
  return g;
}

std::size_t events_through_iteration(std::span<const Event> events, std::uint64_t iterations) {
  std::uint64_t pops = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const bool pop = events[i].kind == EventKind::Wake || events[i].kind == EventKind::Expire;
    if (pop && ++pops > iterations) return i;
  }
  return events.size();
}

}  // namespace endorsim
