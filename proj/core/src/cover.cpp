#include "compnum/cover.hpp"

#include <algorithm>
#include <string>

#include "compnum/cliques.hpp"
#include "compnum/error.hpp"
#include "compnum/set_cover.hpp"

namespace compnum {

namespace {

// Solves the cover over maximal cliques and fills the witness in clique order.
CoverResult solve(const std::vector<Clique>& cliques, std::vector<DynBits> sets, std::size_t universe,
                  CliqueCover witness) {
  CoverResult result;
  result.witness = std::move(witness);
  if (universe == 0) return result;

  DynBits target(universe);
  for (std::size_t i = 0; i < universe; ++i) target.set(i);
  SetCoverSolver solver(universe, std::move(sets));
  auto picked = solver.minimum_cover(target);
  // maximal cliques cover every vertex and every edge, so this cannot fail
  if (!picked) throw GraphError("internal: target not coverable by maximal cliques");
  for (std::size_t idx : *picked) result.witness.cliques.push_back(cliques[idx]);
  result.value = static_cast<int>(picked->size());
  result.nodes = solver.stats().nodes;
  return result;
}

}  // namespace

CoverResult theta_edge_restricted(std::span<const Edge> target, const Graph& g) {
  std::vector<Edge> edges(target.begin(), target.end());
  for (Edge& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) {
      throw GraphError("target edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} is not an edge of the graph");
    }
  }

  CliqueCover witness;
  witness.kind = CoverKind::Edge;
  witness.target_edges = edges;
  if (edges.empty()) return CoverResult{0, std::move(witness), 0};

  require_mask_sized(g);
  std::vector<Clique> candidates;
  std::vector<DynBits> sets;
  for (Clique& c : maximal_cliques(g)) {
    Mask m = c.to_mask();
    DynBits covered(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (contains(m, edges[i].u) && contains(m, edges[i].v)) covered.set(i);
    }
    if (covered.none()) continue;
    candidates.push_back(std::move(c));
    sets.push_back(std::move(covered));
  }
  return solve(candidates, std::move(sets), edges.size(), std::move(witness));
}

CoverResult theta_edge(const Graph& g) { return theta_edge_restricted(g.edges(), g); }

CoverResult theta_vertex(const Graph& g) {
  CliqueCover witness;
  witness.kind = CoverKind::Vertex;
  witness.target_vertices = VertexSet::range(g.vertex_count());
  if (g.vertex_count() == 0) return CoverResult{0, std::move(witness), 0};

  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Clique> candidates = maximal_cliques(g);
  std::vector<DynBits> sets;
  for (const Clique& c : candidates) {
    DynBits covered(n);
    for (Vertex v : c) covered.set(static_cast<std::size_t>(v));
    sets.push_back(std::move(covered));
  }
  return solve(candidates, std::move(sets), n, std::move(witness));
}

bool is_valid_cover(const Graph& g, const CliqueCover& cover) {
  for (const Clique& c : cover.cliques) {
    for (Vertex v : c)
      if (!g.has_vertex(v)) return false;
    if (!is_clique(g, c)) return false;
  }
  if (cover.kind == CoverKind::Edge) {
    return std::all_of(cover.target_edges.begin(), cover.target_edges.end(), [&](const Edge& e) {
      return std::any_of(cover.cliques.begin(), cover.cliques.end(),
                         [&](const Clique& c) { return c.contains(e.u) && c.contains(e.v); });
    });
  }
  return std::all_of(cover.target_vertices.begin(), cover.target_vertices.end(), [&](Vertex v) {
    return std::any_of(cover.cliques.begin(), cover.cliques.end(),
                       [&](const Clique& c) { return c.contains(v); });
  });
}

}  // namespace compnum
