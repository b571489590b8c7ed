#pragma once

#include <optional>
#include <vector>

#include "compnum/graph.hpp"

namespace compnum {

/// Backtracking isomorphism search with degree/neighbor-degree refinement.
/// Exponential in the worst case; intended for the small graphs in this
/// toolkit (tens of vertices). Returns map with map[v in a] = vertex in b.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace compnum
