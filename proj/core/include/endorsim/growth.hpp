#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "endorsim/graph.hpp"
#include "endorsim/random.hpp"

namespace endorsim {

inline constexpr double kDaysPerMonth = 30.44;
inline constexpr std::size_t kInitialCliqueSize = 5;
inline constexpr int kTwoHopRetries = 10;

/// Expected node arrivals per month as a function of time in months.
/// Negative evaluations are clamped to zero.
class ArrivalFunction {
 public:
  enum class Kind { Polynomial, Exponential };

  // Coefficients highest degree first: {3900, 76000, -130000} is 3900t^2 + 76000t - 130000.
  static ArrivalFunction polynomial(std::vector<double> coefficients);
  // scale * exp(rate * t)
  static ArrivalFunction exponential(double scale, double rate);

  double operator()(double months) const noexcept;

  Kind kind() const noexcept { return kind_; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }

 private:
  ArrivalFunction(Kind kind, std::vector<double> coefficients)
      : kind_(kind), coefficients_(std::move(coefficients)) {}

  Kind kind_;
  std::vector<double> coefficients_;
};

// alpha: sleep exponent in (0, 1); beta: per-day sleep rate coefficient;
// lambda: per-day lifetime rate.
struct GrowthParams {
  ArrivalFunction arrival = ArrivalFunction::polynomial({0.0});
  double alpha = 0.5;
  double beta = 1.0;
  double lambda = 1.0;

  void validate() const;  // throws ParameterError
};

// Built-in parameter sets: flickr, delicious, answers, linkedin.
GrowthParams preset(std::string_view name);
std::span<const std::string_view> preset_names() noexcept;

// At least one bound must be set; the run stops when any bound trips.
struct TerminationSpec {
  std::optional<double> max_clock;  // days
  std::optional<std::uint64_t> max_iterations;
  std::optional<std::size_t> max_nodes;

  void validate() const;  // throws ValidationError
};

struct NodeState {
  Vertex id = 0;
  double death_time = 0.0;
  double wake_time = 0.0;
};

enum class EventKind {
  Clique,  // initial clique edge (node, peer) at t = 0
  Wake,    // a live node acted; peer is the two-hop target, if one was found
  Expire,  // a node woke past its lifetime and left the queue
  Arrive,  // a new node joined, attached to peer by preferential attachment
};

std::string_view to_string(EventKind kind) noexcept;

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::Wake;
  Vertex node = 0;
  std::optional<Vertex> peer;

  friend bool operator==(const Event&, const Event&) = default;
};

enum class StopReason { IterationLimit, NodeLimit, ClockLimit, QueueExhausted };

std::string_view to_string(StopReason reason) noexcept;

struct GrowthResult {
  Graph graph;
  std::vector<Event> events;
  std::uint64_t iterations = 0;
  double clock = 0.0;
  StopReason stop = StopReason::IterationLimit;
};

/// Exponential lifetime with rate lambda (days).
double sample_lifetime(const GrowthParams& params, Rng& rng);

/// Sleep time with density proportional to x^-alpha * exp(-beta * d * x): a
/// gamma variate with shape 1 - alpha and rate beta * d. Degree 0 is treated as 1.
double sample_sleep(std::size_t degree, const GrowthParams& params, Rng& rng);

/// Poisson arrival count over [t0, t1] days, rate evaluated at the left endpoint.
std::uint64_t arrivals_between(double t0, double t1, const GrowthParams& params, Rng& rng);

/// Adds an edge closing a length-2 path from u, if one can be found within
/// kTwoHopRetries intermediate-neighbor draws.
std::optional<Edge> close_two_hop(Graph& g, Vertex u, Rng& rng);

/// Vertex other than `exclude`, chosen with probability proportional to its degree.
/// Throws ValidationError if no such vertex has positive degree.
Vertex preferential_target(const Graph& g, Vertex exclude, Rng& rng);

/// Discrete-event growth from a 5-clique. Deterministic for a given seed.
GrowthResult generate_base(const GrowthParams& params, const TerminationSpec& term,
                           std::uint64_t seed);

// Event log as CSV with header `t,event,node,peer`; peer is empty when absent.
std::string event_log_csv(std::span<const Event> events);
std::vector<Event> parse_event_log_csv(std::string_view text);

// Rebuilds the graph described by a prefix of the event log.
Graph replay_events(std::span<const Event> events);

// Number of leading events that belong to the first `iterations` main-cycle
// iterations (initialization included).
std::size_t events_through_iteration(std::span<const Event> events, std::uint64_t iterations);

}  // namespace endorsim
