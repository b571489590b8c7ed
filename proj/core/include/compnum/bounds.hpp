#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compnum/cover.hpp"
#include "compnum/graph.hpp"

namespace compnum {

enum class BoundKind { Lower, Exact };

struct BoundEntry {
  std::string name;  // e.g. "opsut_edge", "subset_m3", "chordal"
  int value = 0;
  BoundKind kind = BoundKind::Lower;
  std::vector<Vertex> witness;  // argmin vertex / subset, if any
  std::string note;             // how the value was obtained
};

struct BoundReport {
  std::string graph_id;
  std::vector<BoundEntry> entries;
  /// Max over applicable lower-bound entries, clamped at 0.
  int best_lower = 0;
  /// Exact value from a closed form, when one applies.
  std::optional<int> exact;
};

/// Chordality by maximum cardinality search and a perfect elimination check.
bool is_chordal(const Graph& g);

/// A perfect elimination ordering (each vertex's later neighbors form a
/// clique) if g is chordal.
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);

/// k(G) = 1 for chordal G without isolated vertices (and n >= 1).
std::optional<int> chordal_exact(const Graph& g);

/// k(G) = |E| - |V| + 2 for connected triangle-free G with |V| > 1.
std::optional<int> triangle_free_exact(const Graph& g);

/// k(K_{n,n,n}) = n^2 - 3n + 4 for n >= 2.
std::optional<int> tripartite_exact(int part_size);

/// Part size n if g is K_{n,n,n} (under any labelling), else nullopt.
std::optional<int> balanced_tripartite_part_size(const Graph& g);

/// theta_E(G) - |V| + 2, unclamped. Valid as a bound only when |V| >= 2.
int opsut_edge_bound(const Graph& g);

struct VertexBound {
  int value = 0;
  Vertex argmin = 0;
};

/// min over v of theta_V(N_G(v)). Throws GraphError on the empty graph.
VertexBound opsut_vertex_bound(const Graph& g);

struct SubsetBound {
  int value = 0;        // min cover - m + 1
  int min_cover = 0;    // min over U of theta_E(E_G[U]; N_G[U])
  VertexSet argmin;     // lexicographically least minimizing U
};

/// min over m-subsets U of theta_E(E_G[U]; N_G[U]) - m + 1.
/// Throws GraphError unless 1 <= m <= |V|.
SubsetBound subset_bound(const Graph& g, int m);

/// theta_E(E_G[U]; N_G[U]) for one subset, evaluated on the induced N_G[U].
int local_cover_number(const Graph& g, const VertexSet& subset);

/// Every applicable bound and closed form; subset for m = 1..min(m_max, n).
BoundReport best_lower_bound(const Graph& g, int m_max = 3, std::string graph_id = {});

std::string to_string(BoundKind kind);

}  // namespace compnum
