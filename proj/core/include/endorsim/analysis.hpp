#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endorsim/graph.hpp"
#include "endorsim/growth.hpp"
#include "endorsim/local_search.hpp"

namespace endorsim {

using DegreeSequence = std::vector<std::size_t>;

DegreeSequence degree_sequence(const Graph& g);

inline constexpr std::size_t kDefaultKMin = 3;

/// Degree exponent predicted by the growth model:
/// 1 + lambda * Gamma(2 - alpha) / (beta * Gamma(1 - alpha)).
double theoretical_exponent(const GrowthParams& params);

/// Continuous maximum-likelihood power-law exponent over degrees >= k_min:
/// 1 + n / sum(ln(k / (k_min - 1/2))). Needs at least 30 qualifying degrees
/// with some spread; throws ValidationError otherwise.
double fit_power_law(std::span<const std::size_t> degrees, std::size_t k_min = kDefaultKMin);

/// Exact diameter by breadth-first search from every vertex. Throws
/// ValidationError naming an unreachable pair if g is disconnected.
std::size_t diameter(const Graph& g);

struct ExponentialFit {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> r2;  // undefined when ln y has no variance
};

/// Least-squares fit of y = a * exp(b * x) via a line through (x, ln y).
ExponentialFit fit_exponential(std::span<const double> xs, std::span<const double> ys);
ExponentialFit fit_exponential(const ConvergenceTrace& trace);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::optional<double> r2;  // undefined when y has no variance
};

/// Ordinary least squares; needs two distinct x values.
LinearFit fit_linear(std::span<const double> xs, std::span<const double> ys);

struct DensificationRow {
  std::uint64_t iteration = 0;
  double time = 0.0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double average_degree = 0.0;
  std::optional<std::size_t> diameter;  // skipped on request; it costs O(|V| |E|)
};

/// Graph statistics after each listed main-cycle iteration, rebuilt from the
/// growth event log. Iteration 0 is the initial clique.
std::vector<DensificationRow> densification_report(std::span<const Event> events,
                                                   std::span<const std::uint64_t> checkpoints,
                                                   bool with_diameter = true);

// Evenly spaced checkpoints: total * k / count for k = 1..count.
std::vector<std::uint64_t> even_checkpoints(std::uint64_t total_iterations, std::size_t count);

std::string densification_csv(std::span<const DensificationRow> rows);

}  // namespace endorsim
