#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "compnum/bounds.hpp"
#include "compnum/cover.hpp"
#include "compnum/error.hpp"
#include "compnum/generators.hpp"
#include "oracles.hpp"

namespace compnum {
namespace {

const BoundEntry* find_entry(const BoundReport& r, const std::string& name) {
  for (const BoundEntry& e : r.entries)
    if (e.name == name) return &e;
  return nullptr;
}

TEST(Chordal, Examples) {
  EXPECT_EQ(chordal_exact(complete_graph(4)), 1);
  EXPECT_EQ(chordal_exact(cycle_graph(4)), std::nullopt);
  EXPECT_EQ(chordal_exact(with_isolated_vertices(complete_graph(3), 1)), std::nullopt);
  EXPECT_TRUE(is_chordal(path_graph(5)));
  EXPECT_FALSE(is_chordal(cycle_graph(5)));
}

TEST(Chordal, EliminationOrderingIsPerfect) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 9), 0.6, rng);
    auto peo = perfect_elimination_ordering(g);
    EXPECT_EQ(peo.has_value(), is_chordal(g));
    if (!peo) continue;
    std::vector<std::size_t> pos(g.vertex_count());
    for (std::size_t i = 0; i < peo->size(); ++i) pos[(*peo)[i]] = i;
    for (Vertex v : *peo) {
      std::vector<Vertex> later;
      for (Vertex w : g.neighbors(v))
        if (pos[w] > pos[v]) later.push_back(w);
      for (std::size_t a = 0; a < later.size(); ++a)
        for (std::size_t b = a + 1; b < later.size(); ++b) EXPECT_TRUE(g.adjacent(later[a], later[b]));
    }
  }
}

TEST(TriangleFree, Examples) {
  EXPECT_EQ(triangle_free_exact(hexahedron()), 6);
  EXPECT_EQ(triangle_free_exact(dodecahedron()), 12);
  EXPECT_EQ(triangle_free_exact(cycle_graph(4)), 2);
  EXPECT_EQ(triangle_free_exact(complete_graph(3)), std::nullopt);
  EXPECT_EQ(triangle_free_exact(Graph(4, {{0, 1}, {2, 3}})), std::nullopt);
}

TEST(Tripartite, Formula) {
  EXPECT_EQ(tripartite_exact(2), 2);
  EXPECT_EQ(tripartite_exact(3), 4);
  EXPECT_EQ(tripartite_exact(1), std::nullopt);
  EXPECT_EQ(balanced_tripartite_part_size(octahedron()), 2);
  EXPECT_EQ(balanced_tripartite_part_size(complete_multipartite_graph({3, 3, 3})), 3);
  EXPECT_EQ(balanced_tripartite_part_size(complete_multipartite_graph({2, 2, 3})), std::nullopt);
}

TEST(OpsutEdge, Examples) {
  EXPECT_EQ(opsut_edge_bound(icosahedron()), 2);
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(opsut_edge_bound(complete_graph(n)), 3 - n);
  EXPECT_EQ(opsut_edge_bound(cycle_graph(4)), 2);
}

TEST(OpsutVertex, Examples) {
  EXPECT_EQ(opsut_vertex_bound(icosahedron()).value, 3);
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(opsut_vertex_bound(complete_graph(n)).value, 1);
  EXPECT_EQ(opsut_vertex_bound(with_isolated_vertices(complete_graph(3), 1)).value, 0);
  EXPECT_THROW(opsut_vertex_bound(edgeless_graph(0)), GraphError);
}

TEST(SubsetBoundTest, Examples) {
  SubsetBound ico = subset_bound(icosahedron(), 3);
  EXPECT_EQ(ico.value, 4);
  EXPECT_EQ(ico.min_cover, 6);
  EXPECT_EQ(ico.argmin.size(), 3u);
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= n; ++m) EXPECT_EQ(subset_bound(complete_graph(n), m).value, 2 - m);
  EXPECT_THROW(subset_bound(cycle_graph(4), 0), GraphError);
  EXPECT_THROW(subset_bound(cycle_graph(4), 5), GraphError);
}

TEST(SubsetBoundTest, SingletonsMatchVertexBound) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::graphs_up_to_isomorphism(n)) {
      if (g.has_isolated_vertex()) continue;
      EXPECT_EQ(subset_bound(g, 1).value, opsut_vertex_bound(g).value);
    }
}

TEST(SubsetBoundTest, WholeVertexSetIsEdgeCoverArithmetic) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::graphs_up_to_isomorphism(n)) {
      EXPECT_EQ(subset_bound(g, n).value, theta_edge_restricted(g.edges(), g).value - n + 1);
    }
}

TEST(SubsetBoundTest, DominatesOpsutOnConnectedGraphs) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : oracle::connected_graphs_up_to_isomorphism(n)) {
      int best = subset_bound(g, 1).value;
      for (int m = 2; m <= n; ++m) best = std::max(best, subset_bound(g, m).value);
      EXPECT_GE(best, std::max(opsut_edge_bound(g), opsut_vertex_bound(g).value));
    }
}

TEST(Report, Examples) {
  BoundReport ico = best_lower_bound(icosahedron(), 3, "icosahedron");
  EXPECT_EQ(ico.best_lower, 4);
  ASSERT_NE(find_entry(ico, "subset_m3"), nullptr);
  EXPECT_EQ(find_entry(ico, "subset_m3")->value, 4);
  EXPECT_EQ(ico.exact, std::nullopt);

  BoundReport k4 = best_lower_bound(complete_graph(4));
  EXPECT_EQ(k4.exact, 1);
  EXPECT_EQ(k4.best_lower, 1);
  for (const BoundEntry& e : k4.entries) EXPECT_LE(e.value, 1);

  BoundReport c4 = best_lower_bound(cycle_graph(4));
  EXPECT_EQ(c4.best_lower, 2);
  EXPECT_EQ(c4.exact, 2);
}

TEST(Report, NegativeEntriesKeptAndAggregateClamped) {
  BoundReport k6 = best_lower_bound(complete_graph(6));
  ASSERT_NE(find_entry(k6, "opsut_edge"), nullptr);
  EXPECT_EQ(find_entry(k6, "opsut_edge")->value, -3);
  EXPECT_GE(k6.best_lower, 0);
}

TEST(Report, SmallGraphsSkipEdgeBound) {
  BoundReport k1 = best_lower_bound(complete_graph(1));
  EXPECT_EQ(find_entry(k1, "opsut_edge"), nullptr);
  EXPECT_EQ(k1.best_lower, 0);
}

TEST(Soundness, BoundsNeverExceedOracleUpToFiveVertices) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::graphs_up_to_isomorphism(n)) {
      const int k = oracle::competition_number(g);
      BoundReport r = best_lower_bound(g, n);
      for (const BoundEntry& e : r.entries) {
        if (e.kind == BoundKind::Lower) {
          EXPECT_LE(e.value, k) << e.name;
        } else {
          EXPECT_EQ(e.value, k) << e.name;
        }
      }
      EXPECT_LE(r.best_lower, k);
      if (r.exact) EXPECT_EQ(*r.exact, k);
    }
}

}  // namespace
}  // namespace compnum
