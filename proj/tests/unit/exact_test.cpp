#include <gtest/gtest.h>

#include <chrono>

#include "compnum/bounds.hpp"
#include "compnum/competition.hpp"
#include "compnum/generators.hpp"
#include "oracles.hpp"

namespace compnum {
namespace {

void expect_exact(const Graph& g, int expected) {
  ExactResult r = exact_competition_number(g);
  ASSERT_TRUE(r.exact()) << r.reason;
  EXPECT_EQ(r.upper, expected);
  EXPECT_EQ(r.lower, expected);
  EXPECT_EQ(r.certificate.k, expected);
  EXPECT_TRUE(verify_certificate(r.certificate).valid);
}

TEST(Exact, Examples) {
  expect_exact(complete_graph(4), 1);
  expect_exact(octahedron(), 2);
  expect_exact(cycle_graph(4), 2);
  expect_exact(path_graph(3), 1);
  expect_exact(edgeless_graph(3), 0);
  expect_exact(complete_graph(1), 0);
}

TEST(Exact, SearchAloneFindsOptimum) {
  ExactBudget unaided;
  unaided.use_bounds = false;
  for (const auto& [g, k] : std::vector<std::pair<Graph, int>>{
           {complete_graph(4), 1}, {octahedron(), 2}, {cycle_graph(4), 2}, {cycle_graph(5), 2}}) {
    ExactResult r = exact_competition_number(g, unaided);
    ASSERT_TRUE(r.exact()) << r.reason;
    EXPECT_EQ(r.upper, k);
    EXPECT_TRUE(verify_certificate(r.certificate).valid);
  }
}

TEST(Exact, MatchesOracleOnSmallGraphs) {
  ExactBudget unaided;
  unaided.use_bounds = false;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::graphs_up_to_isomorphism(n)) {
      const int expected = oracle::competition_number(g);
      ExactResult aided = exact_competition_number(g);
      ExactResult alone = exact_competition_number(g, unaided);
      ASSERT_TRUE(aided.exact() && alone.exact());
      EXPECT_EQ(aided.upper, expected);
      EXPECT_EQ(alone.upper, expected);
    }
}

TEST(Exact, CanonicalFormLosesNothing) {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : oracle::graphs_up_to_isomorphism(n)) {
      EXPECT_EQ(oracle::competition_number(g), oracle::competition_number_unrestricted(g));
    }
}

TEST(Exact, AddingIsolatedVerticesNeverHurts) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : oracle::connected_graphs_up_to_isomorphism(n)) {
      const int k = exact_competition_number(g).upper;
      const int padded = exact_competition_number(with_isolated_vertices(g, 1)).upper;
      EXPECT_EQ(padded, std::max(0, k - 1));
    }
}

TEST(Exact, OversizedGraphReturnsSandwich) {
  ExactBudget small;
  small.max_vertices = 6;
  ExactResult r = exact_competition_number(icosahedron(), small);
  EXPECT_EQ(r.lower, 4);
  EXPECT_GE(r.upper, 4);
  EXPECT_TRUE(verify_certificate(r.certificate).valid);
  EXPECT_EQ(r.certificate.k, r.upper);
  if (!r.exact()) {
    EXPECT_FALSE(r.reason.empty());
  }
}

TEST(Exact, NodeBudgetYieldsInconclusive) {
  ExactBudget tiny;
  tiny.use_bounds = false;
  tiny.max_nodes = 1;
  ExactResult r = exact_competition_number(octahedron(), tiny);
  EXPECT_FALSE(r.exact());
  EXPECT_FALSE(r.reason.empty());
  EXPECT_LE(r.lower, 2);
  EXPECT_GE(r.upper, 2);
  EXPECT_TRUE(verify_certificate(r.certificate).valid);
}

TEST(Exact, TimeBudgetYieldsInconclusive) {
  ExactBudget instant;
  instant.use_bounds = false;
  instant.max_time = std::chrono::milliseconds(0);
  ExactResult r = exact_competition_number(cycle_graph(5), instant);
  if (!r.exact()) {
    EXPECT_LE(r.lower, 2);
    EXPECT_GE(r.upper, 2);
  }
}

}  // namespace
}  // namespace compnum
