#include "endorsim/analysis.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "endorsim/error.hpp"

namespace endorsim {

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  return out;
}

double theoretical_exponent(const GrowthParams& params) {
  params.validate();
  const double a = params.alpha;
  return 1.0 + params.lambda * std::tgamma(2.0 - a) / (params.beta * std::tgamma(1.0 - a));
}

double fit_power_law(std::span<const std::size_t> degrees, std::size_t k_min) {
  if (k_min == 0) throw ValidationError("k_min must be at least 1");
  const double shift = static_cast<double>(k_min) - 0.5;
  std::size_t n = 0;
  double log_sum = 0.0;
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = 0;
  for (std::size_t k : degrees) {
    if (k < k_min) continue;
    ++n;
    log_sum += std::log(static_cast<double>(k) / shift);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  if (n < 30) {
    throw ValidationError("power-law fit needs at least 30 degrees >= k_min (got " + std::to_string(n) + ")");
  }
  if (lo == hi) throw ValidationError("power-law fit needs degrees with some spread");
  return 1.0 + static_cast<double>(n) / log_sum;
}

std::size_t diameter(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> queue(n);
  std::size_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      Vertex missing = 0;
      while (dist[missing] != kUnseen) ++missing;
      throw ValidationError("graph is disconnected: vertex " + std::to_string(missing) +
                            " is unreachable from vertex " + std::to_string(s));
    }
    best = std::max(best, dist[queue[tail - 1]]);
  }
  return best;
}

LinearFit fit_linear(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DimensionError("fit needs equally many x and y values");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (xs.size() < 2 || !(sxx > 0.0)) throw ValidationError("linear fit needs at least two distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy > 0.0) {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
      ss_res += r * r;
    }
    fit.r2 = 1.0 - ss_res / syy;
  }
  return fit;
}

ExponentialFit fit_exponential(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DimensionError("fit needs equally many x and y values");
  if (xs.size() < 3) throw ValidationError("exponential fit needs at least 3 points");
  std::vector<double> logs(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (!(ys[i] > 0.0)) throw ValidationError("exponential fit needs strictly positive values");
    logs[i] = std::log(ys[i]);
  }
  const LinearFit line = fit_linear(xs, logs);
  return {std::exp(line.intercept), line.slope, line.r2};
}

ExponentialFit fit_exponential(const ConvergenceTrace& trace) {
  std::vector<double> xs, ys;
  for (const TracePoint& p : trace.points) {
    xs.push_back(static_cast<double>(p.iteration));
    ys.push_back(p.delta);
  }
  return fit_exponential(xs, ys);
}

std::vector<DensificationRow> densification_report(std::span<const Event> events,
                                                   std::span<const std::uint64_t> checkpoints,
                                                   bool with_diameter) {
  std::vector<DensificationRow> rows;
  for (std::uint64_t it : checkpoints) {
    const std::size_t end = events_through_iteration(events, it);
    const auto prefix = events.first(end);
    const Graph g = replay_events(prefix);
    DensificationRow row;
    row.iteration = it;
    row.time = prefix.empty() ? 0.0 : prefix.back().time;
    row.nodes = g.vertex_count();
    row.edges = g.edge_count();
    row.average_degree = row.nodes == 0 ? 0.0 : 2.0 * static_cast<double>(row.edges) / static_cast<double>(row.nodes);
    if (with_diameter) row.diameter = row.nodes == 0 ? 0 : diameter(g);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::uint64_t> even_checkpoints(std::uint64_t total_iterations, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 1; k <= count; ++k) out.push_back(total_iterations * k / count);
  return out;
}

std::string densification_csv(std::span<const DensificationRow> rows) {
  std::string out = "iteration,t,nodes,edges,avg_degree,diameter\n";
  char buf[64];
  for (const auto& r : rows) {
    out += std::to_string(r.iteration) + ',';
    auto p = std::to_chars(buf, buf + sizeof buf, r.time);
    out.append(buf, p.ptr);
    out += ',' + std::to_string(r.nodes) + ',' + std::to_string(r.edges) + ',';
    p = std::to_chars(buf, buf + sizeof buf, r.average_degree);
    out.append(buf, p.ptr);
    out += ',';
    if (r.diameter) out += std::to_string(*r.diameter);
    out += '\n';
  }
  return out;
}

}  // namespace endorsim
