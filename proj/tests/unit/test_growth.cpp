#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "endorsim/endorsim.hpp"

using namespace endorsim;

namespace {

double mean(const std::vector<double>& xs) { return std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size(); }

bool connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count());
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == g.vertex_count();
}

GrowthResult run(const char* name, std::uint64_t iterations, std::uint64_t seed) {
  TerminationSpec term;
  term.max_iterations = iterations;
  return generate_base(preset(name), term, seed);
}

}  // namespace

TEST(Arrival, PolynomialAndExponentialWithClamp) {
  const auto a = ArrivalFunction::polynomial({3900, 76000, -130000});
  EXPECT_EQ(a(0.0), 0.0);
  EXPECT_EQ(a(1.0), 0.0);
  EXPECT_DOUBLE_EQ(a(2.0), 37600.0);
  const auto e = ArrivalFunction::exponential(1.0, 0.25);
  EXPECT_DOUBLE_EQ(e(4.0), std::exp(1.0));
}

TEST(Presets, TableRowsLoad) {
  for (auto name : preset_names()) EXPECT_NO_THROW(preset(name).validate()) << name;
  const GrowthParams li = preset("linkedin");
  EXPECT_DOUBLE_EQ(li.alpha, 0.78);
  EXPECT_DOUBLE_EQ(li.beta, 0.00036);
  EXPECT_DOUBLE_EQ(li.lambda, 0.0018);
  EXPECT_THROW(preset("myspace"), ValidationError);
}

TEST(Params, DomainChecks) {
  GrowthParams p = preset("flickr");
  p.alpha = 1.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = preset("flickr");
  p.beta = 0.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = preset("flickr");
  p.lambda = -1.0;
  Rng rng(1);
  EXPECT_THROW(sample_lifetime(p, rng), ParameterError);
  p = preset("flickr");
  p.alpha = 0.0;
  EXPECT_THROW(sample_sleep(1, p, rng), ParameterError);
  EXPECT_THROW(generate_base(p, TerminationSpec{std::nullopt, 10, std::nullopt}, 1), ParameterError);
  EXPECT_THROW(generate_base(preset("flickr"), TerminationSpec{}, 1), ValidationError);
}

TEST(Lifetime, LinkedInMeanMatchesOneOverLambda) {
  const GrowthParams p = preset("linkedin");
  Rng rng(101);
  std::vector<double> xs(1'000'000);
  for (double& x : xs) x = sample_lifetime(p, rng);
  EXPECT_EQ(std::count_if(xs.begin(), xs.end(), [](double x) { return x < 0.0; }), 0);
  EXPECT_NEAR(mean(xs), 555.5556, 555.5556 * 0.01);
}

TEST(Lifetime, FlickrMedianIsLn2OverLambda) {
  const GrowthParams p = preset("flickr");
  Rng rng(102);
  std::vector<double> xs(1'000'000);
  for (double& x : xs) x = sample_lifetime(p, rng);
  std::nth_element(xs.begin(), xs.begin() + xs.size() / 2, xs.end());
  EXPECT_NEAR(xs[xs.size() / 2], 75.342, 75.342 * 0.02);
}

TEST(Sleep, MeanIsShapeOverRate) {
  GrowthParams p = preset("linkedin");
  Rng rng(103);
  std::vector<double> xs(1'000'000);
  for (double& x : xs) x = sample_sleep(1, p, rng);
  EXPECT_NEAR(mean(xs), 611.111, 611.111 * 0.01);
  for (double& x : xs) x = sample_sleep(2, p, rng);
  EXPECT_NEAR(mean(xs), 305.556, 305.556 * 0.01);

  p.alpha = 0.92;
  p.beta = 0.0052;
  for (double& x : xs) x = sample_sleep(10, p, rng);
  EXPECT_NEAR(mean(xs), 1.53846, 1.53846 * 0.02);
}

TEST(Sleep, DegreeZeroIsTreatedAsOne) {
  const GrowthParams p = preset("answers");
  Rng a(7), b(7);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(sample_sleep(0, p, a), sample_sleep(1, p, b));
}

TEST(Arrivals, EmptyIntervalZeroRateAndPoissonMean) {
  GrowthParams p = preset("linkedin");
  Rng rng(104);
  EXPECT_EQ(arrivals_between(50.0, 50.0, p, rng), 0u);
  p.arrival = ArrivalFunction::polynomial({0.0});
  for (int k = 0; k < 100; ++k) EXPECT_EQ(arrivals_between(0.0, 1000.0, p, rng), 0u);
  p.arrival = ArrivalFunction::polynomial({-5.0});
  EXPECT_EQ(arrivals_between(0.0, 1000.0, p, rng), 0u);

  p.arrival = ArrivalFunction::polynomial({kDaysPerMonth});
  double sum = 0.0;
  for (int k = 0; k < 100'000; ++k) sum += static_cast<double>(arrivals_between(10.0, 11.0, p, rng));
  EXPECT_NEAR(sum / 100'000, 1.0, 0.02);
}

TEST(TwoHop, PathClosesToTheOnlyCandidate) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    Rng rng(seed);
    const auto e = close_two_hop(g, 0, rng);
    ASSERT_TRUE(e);
    EXPECT_EQ(*e, (Edge{0, 2}));
    EXPECT_TRUE(g.has_edge(0, 2));
  }
}

TEST(TwoHop, TriangleAndStarCenterHaveNoCandidate) {
  Rng rng(1);
  Graph tri = Graph::complete(3);
  for (Vertex u = 0; u < 3; ++u) EXPECT_FALSE(close_two_hop(tri, u, rng));
  EXPECT_EQ(tri.edge_count(), 3u);

  Graph star(5);
  for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  EXPECT_FALSE(close_two_hop(star, 0, rng));
  EXPECT_EQ(star.edge_count(), 4u);

  Graph lone(1);
  EXPECT_FALSE(close_two_hop(lone, 0, rng));
}

TEST(TwoHop, TargetIsAlwaysAtDistanceTwo) {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g(12);
    for (int k = 0; k < 18; ++k) {
      const Vertex u = rng() % 12, v = rng() % 12;
      if (u != v) g.add_edge(u, v);
    }
    const Vertex u = rng() % 12;
    const Graph before = g;
    const auto e = close_two_hop(g, u, rng);
    if (!e) {
      EXPECT_EQ(g, before);
      continue;
    }
    const Vertex w = e->u == u ? e->v : e->u;
    EXPECT_FALSE(before.has_edge(u, w));
    bool via = false;
    for (Vertex v : before.neighbors(u)) via = via || before.has_edge(v, w);
    EXPECT_TRUE(via);
    EXPECT_EQ(g.edge_count(), before.edge_count() + 1);
  }
}

TEST(Preferential, DegreeThreeVersusOne) {
  // Star center (degree 3) against one leaf (degree 1); vertex 4 is excluded.
  Graph g(5);
  for (Vertex v = 1; v < 4; ++v) g.add_edge(0, v);
  Rng rng(105);
  std::map<Vertex, int> hits;
  for (int k = 0; k < 100'000; ++k) ++hits[preferential_target(g, 4, rng)];
  EXPECT_EQ(hits.count(4), 0u);
  const double ratio = static_cast<double>(hits[0]) / hits[1];
  EXPECT_NEAR(ratio, 3.0, 3.0 * 0.05);
}

TEST(Preferential, SingleEligibleVertex) {
  Graph g(3);
  g.add_edge(0, 1);
  Rng rng(1);
  for (int k = 0; k < 1000; ++k) EXPECT_EQ(preferential_target(g, 0, rng), 1u);
  EXPECT_THROW(preferential_target(Graph(3), 0, rng), ValidationError);
}

TEST(Preferential, EqualDegreesPassChiSquare) {
  const std::size_t n = 10;
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  Rng rng(106);
  std::vector<double> counts(n, 0.0);
  const int draws = 90'000;
  for (int k = 0; k < draws; ++k) ++counts[preferential_target(g, 0, rng)];
  EXPECT_EQ(counts[0], 0.0);
  const double expected = draws / 9.0;
  double chi2 = 0.0;
  for (Vertex v = 1; v < n; ++v) chi2 += (counts[v] - expected) * (counts[v] - expected) / expected;
  EXPECT_LT(chi2, 26.12);  // 8 degrees of freedom, p = 0.001
}

TEST(Generate, ZeroIterationsGivesTheInitialClique) {
  const GrowthResult r = run("linkedin", 0, 1);
  EXPECT_EQ(r.graph, Graph::complete(kInitialCliqueSize));
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(r.events.size(), 10u);
}

TEST(Generate, SameSeedSameOutput) {
  const GrowthResult a = run("linkedin", 1000, 42);
  const GrowthResult b = run("linkedin", 1000, 42);
  EXPECT_EQ(encode(a.graph), encode(b.graph));
  EXPECT_EQ(a.events, b.events);
  const GrowthResult c = run("linkedin", 1000, 43);
  EXPECT_NE(encode(a.graph), encode(c.graph));
}

TEST(Generate, NodeBoundHaltsAtOrAboveTheBound) {
  TerminationSpec term;
  term.max_nodes = 500;
  const GrowthResult r = generate_base(preset("answers"), term, 7);
  EXPECT_GE(r.graph.vertex_count(), 500u);
  EXPECT_EQ(r.stop, StopReason::NodeLimit);
}

TEST(Generate, ClockBound) {
  TerminationSpec term;
  term.max_clock = 40.0;
  const GrowthResult r = generate_base(preset("delicious"), term, 3);
  EXPECT_LE(r.clock, 40.0);
  for (const Event& e : r.events) EXPECT_LE(e.time, 40.0);
}

TEST(GenerateProperty, ConnectedMonotoneAndReplayable) {
  const char* names[] = {"flickr", "delicious", "answers", "linkedin"};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    TerminationSpec term;
    term.max_iterations = 300;
    term.max_nodes = 20'000;
    term.max_clock = 30.0;
    const GrowthResult r = generate_base(preset(names[seed % 4]), term, seed);
    EXPECT_TRUE(connected(r.graph)) << seed;

    double t = 0.0;
    std::set<Vertex> expired;
    std::uint64_t pops = 0;
    for (const Event& e : r.events) {
      EXPECT_GE(e.time, t);
      t = e.time;
      if (e.kind == EventKind::Wake || e.kind == EventKind::Expire) {
        ++pops;
        EXPECT_FALSE(expired.count(e.node)) << "node " << e.node << " acted after expiring";
      }
      if (e.kind == EventKind::Expire) expired.insert(e.node);
    }
    EXPECT_EQ(pops, r.iterations);
    EXPECT_EQ(replay_events(r.events), r.graph);

    const auto parsed = parse_event_log_csv(event_log_csv(r.events));
    EXPECT_EQ(parsed, r.events);
  }
}

TEST(EventLog, PrefixReplay) {
  const GrowthResult r = run("answers", 200, 5);
  EXPECT_EQ(events_through_iteration(r.events, 0), 10u);
  EXPECT_EQ(replay_events(std::span(r.events).first(events_through_iteration(r.events, 0))),
            Graph::complete(5));
  EXPECT_EQ(events_through_iteration(r.events, 200), r.events.size());
  EXPECT_THROW(parse_event_log_csv("t,event,node,peer\n1,jump,3,\n"), ParseError);
  EXPECT_THROW(parse_event_log_csv("time,kind\n"), ParseError);
}
