#include "compnum/digraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "compnum/error.hpp"

namespace compnum {

Digraph::Digraph(int n, std::span<const Arc> arcs) : n_(n) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  arcs_.assign(arcs.begin(), arcs.end());
  for (const Arc& a : arcs_) {
    if (a.from == a.to) throw GraphError("self-loop at vertex " + std::to_string(a.from));
    if (a.from < 0 || a.to < 0 || a.from >= n || a.to >= n) {
      throw GraphError("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  out_.assign(n, {});
  in_.assign(n, {});
  for (const Arc& a : arcs_) {
    out_[a.from].push_back(a.to);
    in_[a.to].push_back(a.from);
  }
  for (auto& l : in_) std::sort(l.begin(), l.end());
}

Digraph::Digraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> arcs) {
  std::vector<Arc> list;
  for (auto [a, b] : arcs) list.push_back(Arc{a, b});
  *this = Digraph(n, list);
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  if (from < 0 || from >= n_) return false;
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order) : order_(std::move(order)) {
  const std::size_t n = order_.size();
  position_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || position_[v] != n) {
      throw GraphError("ordering is not a permutation of 0.." + std::to_string(n - 1));
    }
    position_[v] = i;
  }
}

bool VertexOrdering::is_acyclic_ordering_of(const Digraph& d) const {
  if (static_cast<int>(order_.size()) != d.vertex_count()) return false;
  return std::all_of(d.arcs().begin(), d.arcs().end(), [&](const Arc& a) {
    return position_[a.from] < position_[a.to];
  });
}

AcyclicityResult is_acyclic(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> indegree(n);
  for (const Arc& a : d.arcs()) ++indegree[a.to];

  // Kahn with a min-heap so the witness ordering is deterministic.
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  AcyclicityResult result;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    result.ordering.push_back(v);
    for (Vertex w : d.out_neighbors(v)) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(result.ordering.size()) == n) {
    result.acyclic = true;
    return result;
  }

  // Every leftover vertex keeps an in-arc from another leftover vertex, so
  // walking predecessors from any of them must revisit a vertex.
  std::vector<char> leftover(n, 0);
  for (Vertex v = 0; v < n; ++v) leftover[v] = indegree[v] > 0;
  Vertex start = static_cast<Vertex>(std::find(leftover.begin(), leftover.end(), 1) - leftover.begin());
  std::vector<int> seen_at(n, -1);
  std::vector<Vertex> walk;
  Vertex cur = start;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(walk.size());
    walk.push_back(cur);
    auto preds = d.in_neighbors(cur);
    cur = *std::find_if(preds.begin(), preds.end(), [&](Vertex p) { return leftover[p] != 0; });
  }
  std::vector<Vertex> cycle(walk.begin() + seen_at[cur], walk.end());
  std::reverse(cycle.begin(), cycle.end());  // predecessor walk -> forward arcs
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  result.ordering.clear();
  result.cycle = std::move(cycle);
  return result;
}

}  // namespace compnum
