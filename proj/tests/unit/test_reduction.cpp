#include <gtest/gtest.h>

#include <random>

#include "endorsim/endorsim.hpp"

using namespace endorsim;

TEST(RipToRep, TwoByTwoExample) {
  const RepInstance rep = rip_to_rep(RipInstance({{2, 1}, {1, 3}}));
  EXPECT_EQ(*rep.graph, Graph::complete(5));
  EXPECT_EQ(rep.exact[0][0], Rational::of(2, 5));
  EXPECT_EQ(rep.exact[0][1], Rational::of(1, 2));
  EXPECT_EQ(rep.exact[1][0], Rational::of(1, 3));
  EXPECT_EQ(rep.exact[1][1], Rational::of(3, 5));
  EXPECT_DOUBLE_EQ(rep.target(1, 0), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(rep.target(0, 0), 0.4);
}

TEST(RipToRep, SingleSet) {
  const RepInstance rep = rip_to_rep(RipInstance(std::vector<std::vector<std::int64_t>>{{1}}));
  EXPECT_EQ(rep.graph->vertex_count(), 1u);
  EXPECT_EQ(rep.exact[0][0], Rational::of(1, 1));
}

TEST(RipToRep, OversizedIntersectionIsFlagged) {
  const RepInstance rep = rip_to_rep(RipInstance({{1, 2}, {2, 3}}));
  EXPECT_EQ(rep.exact[0][1], Rational::of(2, 1));
  EXPECT_FALSE(rep.target.sanity_violations().empty());
}

TEST(RipToRep, Errors) {
  EXPECT_THROW(RipInstance({{1, 2}, {1, 3}}), ValidationError);
  EXPECT_THROW(RipInstance({{1, -1}, {-1, 3}}), ValidationError);
  EXPECT_THROW(RipInstance({{1, 2}}), ValidationError);
  EXPECT_THROW(rip_to_rep(RipInstance({{0, 1}, {1, 3}})), ValidationError);
  EXPECT_THROW(rip_to_rep(RipInstance({{0, 0}, {0, 3}})), ValidationError);
}

TEST(Rational, Normalizes) {
  EXPECT_EQ(Rational::of(6, 8), (Rational{3, 4}));
  EXPECT_EQ(Rational::of(0, 5), (Rational{0, 1}));
  EXPECT_THROW(Rational::of(1, 0), ValidationError);
}

TEST(RipToRepProperty, EntriesSatisfyTheConstructionExactly) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<std::vector<std::int64_t>> p(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      p[i][i] = 1 + static_cast<std::int64_t>(rng() % 9);
      for (std::size_t j = 0; j < i; ++j) p[i][j] = p[j][i] = static_cast<std::int64_t>(rng() % 10);
    }
    const RipInstance rip(p);
    const RepInstance rep = rip_to_rep(rip);
    const std::int64_t tr = rip.trace();
    ASSERT_EQ(rep.graph->vertex_count(), static_cast<std::size_t>(tr));
    ASSERT_EQ(rep.graph->edge_count(), static_cast<std::size_t>(tr * (tr - 1) / 2));
    ASSERT_EQ(rep.target.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Rational m = rep.exact[i][j];
        if (i == j) {
          EXPECT_EQ(m.num * tr, p[i][i] * m.den);
        } else {
          EXPECT_EQ(m.num * p[i][i], p[i][j] * m.den);
        }
        EXPECT_DOUBLE_EQ(rep.target(i, j), m.to_double());
      }
    }
  }
}
