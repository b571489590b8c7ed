#include "compnum/cliques.hpp"

#include <algorithm>

#include "compnum/error.hpp"

namespace compnum {

namespace {

// Tomita-style pivoting: pivot maximizes |P & N(pivot)|.
void bron_kerbosch(const Graph& g, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0) {
    if (x == 0) out.push_back(r);
    return;
  }
  Mask px = p | x;
  int pivot = lowest(px);
  int best = -1;
  for_each_bit(px, [&](int u) {
    int score = popcount(p & g.neighbor_mask(u));
    if (score > best) {
      best = score;
      pivot = u;
    }
  });
  Mask candidates = p & ~g.neighbor_mask(pivot);
  for_each_bit(candidates, [&](int v) {
    Mask nv = g.neighbor_mask(v);
    bron_kerbosch(g, r | bit(v), p & nv, x & nv, out);
    p &= ~bit(v);
    x |= bit(v);
  });
}

void all_cliques(const Graph& g, Mask current, Mask candidates, std::vector<Mask>& out) {
  out.push_back(current);
  for_each_bit(candidates, [&](int v) {
    // only extend with larger labels so each clique is produced once
    Mask later = candidates & ~low_bits(v + 1);
    all_cliques(g, current | bit(v), later & g.neighbor_mask(v), out);
  });
}

std::vector<Clique> sorted_cliques(const std::vector<Mask>& masks) {
  std::vector<Clique> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(VertexSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Mask> maximal_clique_masks(const Graph& g, Mask allowed) {
  require_mask_sized(g);
  std::vector<Mask> out;
  if (allowed != 0) bron_kerbosch(g, 0, allowed, 0, out);
  return out;
}

std::vector<Clique> maximal_cliques(const Graph& g) {
  require_mask_sized(g);
  return sorted_cliques(maximal_clique_masks(g, low_bits(g.vertex_count())));
}

std::vector<Clique> cliques_within(const Graph& g, const VertexSet& allowed) {
  require_mask_sized(g);
  require_subset(g, allowed);
  std::vector<Mask> masks;
  all_cliques(g, 0, allowed.to_mask(), masks);
  return sorted_cliques(masks);
}

bool is_clique(const Graph& g, const VertexSet& members) {
  require_subset(g, members);
  auto m = members.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) return false;
  return true;
}

int clique_number(const Graph& g) {
  int best = 0;
  for (Mask m : maximal_clique_masks(g, low_bits(g.vertex_count()))) best = std::max(best, popcount(m));
  return best;
}

}  // namespace compnum
