#include "compnum/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "compnum/error.hpp"

namespace compnum {

namespace {

// Maximum cardinality search; the reverse visit order is a perfect
// elimination ordering iff the graph is chordal.
std::vector<Vertex> mcs_elimination_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    visited[best] = 1;
    visit.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!visited[w]) ++weight[w];
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    // later neighbors must be a clique: it suffices that the earliest of them
    // is adjacent to all the others
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
    }
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && w != parent && !g.adjacent(parent, w)) return false;
    }
  }
  return true;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g) {
  auto order = mcs_elimination_order(g);
  if (!is_perfect_elimination_ordering(g, order)) return std::nullopt;
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

std::optional<int> chordal_exact(const Graph& g) {
  if (g.vertex_count() == 0 || g.has_isolated_vertex() || !is_chordal(g)) return std::nullopt;
  return 1;
}

std::optional<int> triangle_free_exact(const Graph& g) {
  if (g.vertex_count() <= 1 || !is_connected(g) || !is_triangle_free(g)) return std::nullopt;
  return static_cast<int>(g.edge_count()) - g.vertex_count() + 2;
}

std::optional<int> tripartite_exact(int part_size) {
  if (part_size < 2) return std::nullopt;
  return part_size * part_size - 3 * part_size + 4;
}

std::optional<int> balanced_tripartite_part_size(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || n % 3 != 0) return std::nullopt;
  // complete multipartite <=> non-adjacency is an equivalence relation
  std::vector<int> part(n, -1);
  std::vector<Vertex> representatives;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t p = 0; p < representatives.size(); ++p) {
      if (!g.adjacent(v, representatives[p])) {
        part[v] = static_cast<int>(p);
        break;
      }
    }
    if (part[v] < 0) {
      part[v] = static_cast<int>(representatives.size());
      representatives.push_back(v);
    }
  }
  if (representatives.size() != 3) return std::nullopt;
  std::vector<int> sizes(3, 0);
  for (int p : part) ++sizes[p];
  if (sizes[0] != sizes[1] || sizes[1] != sizes[2]) return std::nullopt;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != (part[u] != part[v])) return std::nullopt;
  return n / 3;
}

int opsut_edge_bound(const Graph& g) { return theta_edge(g).value - g.vertex_count() + 2; }

VertexBound opsut_vertex_bound(const Graph& g) {
  if (g.vertex_count() == 0) throw GraphError("vertex bound is undefined on the empty graph");
  VertexBound best{-1, 0};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int value = theta_vertex(induced_subgraph(g, neighborhood_open(g, v)).graph).value;
    if (best.value < 0 || value < best.value) best = {value, v};
  }
  return best;
}

int local_cover_number(const Graph& g, const VertexSet& subset) {
  auto local = induced_subgraph(g, neighborhood_closed(g, subset));
  std::vector<int> to_local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < local.label_map.size(); ++i) to_local[local.label_map[i]] = static_cast<int>(i);
  std::vector<Edge> target;
  for (const Edge& e : incident_edges(g, subset)) target.push_back(make_edge(to_local[e.u], to_local[e.v]));
  return theta_edge_restricted(target, local.graph).value;
}

SubsetBound subset_bound(const Graph& g, int m) {
  const int n = g.vertex_count();
  if (m < 1 || m > n) {
    throw GraphError("subset size m=" + std::to_string(m) + " outside [1, " + std::to_string(n) + "]");
  }
  std::vector<Vertex> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  SubsetBound best;
  best.min_cover = -1;
  while (true) {
    VertexSet subset(pick);
    int cover = local_cover_number(g, subset);
    if (best.min_cover < 0 || cover < best.min_cover) {
      best.min_cover = cover;
      best.argmin = subset;
    }
    // next m-subset in lexicographic order
    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  best.value = best.min_cover - m + 1;
  return best;
}

BoundReport best_lower_bound(const Graph& g, int m_max, std::string graph_id) {
  BoundReport report;
  report.graph_id = std::move(graph_id);
  const int n = g.vertex_count();

  if (n >= 2) {
    auto theta = theta_edge(g);
    int value = theta.value - n + 2;
    report.entries.push_back({"opsut_edge", value, BoundKind::Lower, {},
                              "theta_E(G) - |V| + 2 = " + std::to_string(theta.value) + " - " +
                                  std::to_string(n) + " + 2"});
  }
  if (n >= 1) {
    auto vb = opsut_vertex_bound(g);
    report.entries.push_back({"opsut_vertex", vb.value, BoundKind::Lower, {vb.argmin},
                              "min_v theta_V(N(v)), attained at v=" + std::to_string(vb.argmin)});
  }
  for (int m = 1; m <= std::min(m_max, n); ++m) {
    auto sb = subset_bound(g, m);
    std::vector<Vertex> witness(sb.argmin.begin(), sb.argmin.end());
    report.entries.push_back({"subset_m" + std::to_string(m), sb.value, BoundKind::Lower, witness,
                              "min_U theta_E(E[U]; N[U]) - m + 1 = " + std::to_string(sb.min_cover) +
                                  " - " + std::to_string(m) + " + 1, U={" + join(witness) + "}"});
  }

  if (auto v = chordal_exact(g)) {
    report.entries.push_back({"chordal", *v, BoundKind::Exact, {}, "chordal without isolated vertices"});
  }
  if (auto v = triangle_free_exact(g)) {
    report.entries.push_back({"triangle_free", *v, BoundKind::Exact, {},
                              "connected triangle-free: |E| - |V| + 2 = " +
                                  std::to_string(g.edge_count()) + " - " + std::to_string(n) + " + 2"});
  }
  if (auto part = balanced_tripartite_part_size(g)) {
    if (auto v = tripartite_exact(*part)) {
      report.entries.push_back({"tripartite", *v, BoundKind::Exact, {},
                                "K_{n,n,n}: n^2 - 3n + 4 with n=" + std::to_string(*part)});
    }
  }

  for (const auto& e : report.entries) {
    if (e.kind == BoundKind::Lower) report.best_lower = std::max(report.best_lower, e.value);
    if (e.kind == BoundKind::Exact && !report.exact) report.exact = e.value;
  }
  return report;
}

std::string to_string(BoundKind kind) { return kind == BoundKind::Lower ? "lower" : "exact"; }

}  // namespace compnum
