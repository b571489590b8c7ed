#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "compnum/graph.hpp"

namespace compnum {

enum class CoverKind { Edge, Vertex };

/// A family of cliques together with what it is meant to cover.
struct CliqueCover {
  CoverKind kind = CoverKind::Edge;
  std::vector<Clique> cliques;
  std::vector<Edge> target_edges;  // Edge kind
  VertexSet target_vertices;       // Vertex kind

  [[nodiscard]] std::size_t size() const { return cliques.size(); }
};

struct CoverResult {
  int value = 0;
  CliqueCover witness;
  std::uint64_t nodes = 0;
};

/// theta_E(G): minimum edge clique cover, witness drawn from maximal cliques.
CoverResult theta_edge(const Graph& g);

/// theta_E(F; G): minimum number of cliques of G covering every edge of F.
/// Throws GraphError when F is not a subset of E(G).
CoverResult theta_edge_restricted(std::span<const Edge> target, const Graph& g);

/// theta_V(G): minimum vertex clique cover. theta_V of the empty graph is 0.
CoverResult theta_vertex(const Graph& g);

/// Checks the cover invariants: each listed set is a clique of g and every
/// target edge / vertex is covered.
bool is_valid_cover(const Graph& g, const CliqueCover& cover);

}  // namespace compnum
