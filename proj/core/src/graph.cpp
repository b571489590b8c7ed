#include "compnum/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "compnum/error.hpp"

namespace compnum {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u == raw.v) throw GraphError("self-loop at vertex " + std::to_string(raw.u));
    if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n) {
      throw GraphError("edge " + pair_text(raw.u, raw.v) + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    edges_.push_back(make_edge(raw.u, raw.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());

  if (n <= kMaxMaskVertices) {
    masks_.assign(n, 0);
    for (const Edge& e : edges_) {
      masks_[e.u] |= bit(e.v);
      masks_[e.v] |= bit(e.u);
    }
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(make_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()))) {}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  if (!masks_.empty()) return contains(masks_[u], v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Mask Graph::neighbor_mask(Vertex v) const {
  if (!fits_mask()) throw GraphError("graph has more than 64 vertices");
  return masks_[v];
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq(n_);
  for (int v = 0; v < n_; ++v) seq[v] = degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](const auto& l) { return l.empty(); });
}

Graph make_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back(Edge{a, b});
  return Graph(n, edges);
}

Graph edgeless_graph(int k) { return Graph(k, std::span<const Edge>{}); }

Graph with_isolated_vertices(const Graph& g, int k) {
  return Graph(g.vertex_count() + k, g.edges());
}

void require_subset(const Graph& g, const VertexSet& subset) {
  for (Vertex v : subset) {
    if (!g.has_vertex(v)) {
      throw GraphError("vertex " + std::to_string(v) + " is not in a graph with " +
                       std::to_string(g.vertex_count()) + " vertices");
    }
  }
}

void require_mask_sized(const Graph& g) {
  if (!g.fits_mask()) {
    throw GraphError("operation supports at most 64 vertices, got " +
                     std::to_string(g.vertex_count()));
  }
}

VertexSet neighborhood_closed(const Graph& g, const VertexSet& subset) {
  require_subset(g, subset);
  std::vector<Vertex> out(subset.begin(), subset.end());
  for (Vertex u : subset) {
    auto nb = g.neighbors(u);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  return VertexSet(std::move(out));
}

VertexSet neighborhood_open(const Graph& g, Vertex v) {
  require_subset(g, VertexSet{v});
  auto nb = g.neighbors(v);
  return VertexSet(std::vector<Vertex>(nb.begin(), nb.end()));
}

std::vector<Edge> incident_edges(const Graph& g, const VertexSet& subset) {
  require_subset(g, subset);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (subset.contains(e.u) || subset.contains(e.v)) out.push_back(e);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  require_subset(g, subset);
  std::vector<Vertex> label_map(subset.begin(), subset.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < label_map.size(); ++i) local[label_map[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back(Edge{local[e.u], local[e.v]});
  }
  return InducedSubgraph{Graph(static_cast<int>(label_map.size()), edges), std::move(label_map)};
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    // sorted adjacency lists: any common neighbor closes a triangle
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return false;
      if (*i < *j) ++i; else ++j;
    }
  }
  return true;
}

}  // namespace compnum
