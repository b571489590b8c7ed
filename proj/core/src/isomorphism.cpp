#include "compnum/isomorphism.hpp"

#include <algorithm>

namespace compnum {

namespace {

// Sorted multiset of neighbor degrees; a cheap vertex invariant.
std::vector<std::vector<int>> neighbor_degree_profiles(const Graph& g) {
  std::vector<std::vector<int>> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) out[v].push_back(g.degree(w));
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b)
      : a_(a), b_(b), profile_a_(neighbor_degree_profiles(a)), profile_b_(neighbor_degree_profiles(b)),
        map_(a.vertex_count(), -1), used_(b.vertex_count(), 0) {
    // Visit order: each next vertex has the most already-ordered neighbors.
    const int n = a.vertex_count();
    std::vector<char> placed(n, 0);
    std::vector<int> links(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] && a.degree(v) > a.degree(best))) {
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (Vertex w : a.neighbors(best)) ++links[w];
    }
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex c = 0; c < b_.vertex_count(); ++c) {
      if (used_[c] || b_.degree(c) != a_.degree(v) || profile_b_[c] != profile_a_[v]) continue;
      if (!consistent(v, c, depth)) continue;
      map_[v] = c;
      used_[c] = 1;
      if (search(depth + 1)) return true;
      used_[c] = 0;
      map_[v] = -1;
    }
    return false;
  }

  std::vector<Vertex> mapping() const { return map_; }

 private:
  bool consistent(Vertex v, Vertex c, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex u = order_[i];
      if (a_.adjacent(u, v) != b_.adjacent(map_[u], c)) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::vector<int>> profile_a_;
  std::vector<std::vector<int>> profile_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.degree_sequence() != b.degree_sequence()) return std::nullopt;
  Matcher m(a, b);
  if (!m.search(0)) return std::nullopt;
  return m.mapping();
}

}  // namespace compnum
