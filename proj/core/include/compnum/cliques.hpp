#pragma once

#include <vector>

#include "compnum/graph.hpp"

namespace compnum {

/// Inclusion-maximal cliques via pivoted Bron-Kerbosch over bitsets. Each
/// clique is emitted once; output is sorted lexicographically by member list.
/// Isolated vertices appear as singleton cliques. Requires n <= 64.
std::vector<Clique> maximal_cliques(const Graph& g);

/// Maximal cliques of the subgraph induced by `allowed`, in host labels.
std::vector<Mask> maximal_clique_masks(const Graph& g, Mask allowed);

/// Every clique (including the empty set and singletons) whose members lie in
/// `allowed`, sorted lexicographically. Requires n <= 64.
std::vector<Clique> cliques_within(const Graph& g, const VertexSet& allowed);

/// True iff all pairs of `members` are edges. Throws GraphError when a member
/// is not a vertex of g.
bool is_clique(const Graph& g, const VertexSet& members);

/// Size of a largest clique.
int clique_number(const Graph& g);

}  // namespace compnum
