#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "compnum/bits.hpp"
#include "compnum/vertex_set.hpp"

namespace compnum {

/// Unordered pair {u, v} stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes a pair into an Edge (smaller label first).
constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// edges are deduplicated and sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on a loop or an endpoint outside [0, n).
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  [[nodiscard]] bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  [[nodiscard]] bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  /// Neighborhood as a bitset. Only available when vertex_count() <= 64.
  [[nodiscard]] Mask neighbor_mask(Vertex v) const;
  [[nodiscard]] bool fits_mask() const { return n_ <= kMaxMaskVertices; }

  [[nodiscard]] std::vector<int> degree_sequence() const;  // non-increasing
  [[nodiscard]] bool has_isolated_vertex() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Mask> masks_;
};

/// Builds a graph from raw pairs; duplicates collapse, loops and out-of-range
/// endpoints throw GraphError.
Graph make_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

/// Edgeless graph I_k.
Graph edgeless_graph(int k);

/// G together with k new isolated vertices labelled n..n+k-1.
Graph with_isolated_vertices(const Graph& g, int k);

/// Throws GraphError if some member of `subset` is not a vertex of g.
void require_subset(const Graph& g, const VertexSet& subset);

/// Throws GraphError unless g has at most 64 vertices.
void require_mask_sized(const Graph& g);

/// Closed neighborhood N_G[U]: U plus every vertex adjacent to a member of U.
VertexSet neighborhood_closed(const Graph& g, const VertexSet& subset);

/// Open neighborhood N_G(v).
VertexSet neighborhood_open(const Graph& g, Vertex v);

/// E_G[U]: the edges with at least one endpoint in U, sorted.
std::vector<Edge> incident_edges(const Graph& g, const VertexSet& subset);

struct InducedSubgraph {
  Graph graph;
  /// label_map[i] is the host label of vertex i of `graph`.
  std::vector<Vertex> label_map;

  /// Maps an edge of `graph` back to host labels.
  [[nodiscard]] Edge to_host(Edge e) const { return make_edge(label_map[e.u], label_map[e.v]); }
};

/// G[W], relabelled to 0..|W|-1 in ascending host-label order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);

}  // namespace compnum
