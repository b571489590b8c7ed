#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "compnum/vertex_set.hpp"

namespace compnum {

/// Ordered pair (from, to).
struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Loopless digraph without parallel arcs on vertices 0..n-1. Acyclicity is a
/// query, not an invariant.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::span<const Arc> arcs);
  Digraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> arcs);

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] std::size_t arc_count() const { return arcs_.size(); }
  [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }
  [[nodiscard]] std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  [[nodiscard]] std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  [[nodiscard]] bool has_arc(Vertex from, Vertex to) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// A permutation of 0..n-1 listing vertices by position.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  /// Throws GraphError unless `order` is a permutation of 0..order.size()-1.
  explicit VertexOrdering(std::vector<Vertex> order);

  [[nodiscard]] std::size_t size() const { return order_.size(); }
  [[nodiscard]] Vertex at(std::size_t position) const { return order_[position]; }
  [[nodiscard]] std::size_t position_of(Vertex v) const { return position_[v]; }
  [[nodiscard]] const std::vector<Vertex>& order() const { return order_; }

  /// True iff every arc goes from an earlier to a later position.
  [[nodiscard]] bool is_acyclic_ordering_of(const Digraph& d) const;

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
};

struct AcyclicityResult {
  bool acyclic = false;
  /// Acyclic ordering when acyclic (smallest available label first).
  std::vector<Vertex> ordering;
  /// A directed cycle c0 -> c1 -> ... -> c0 otherwise, rotated to start at
  /// its smallest label.
  std::vector<Vertex> cycle;
};

AcyclicityResult is_acyclic(const Digraph& d);

}  // namespace compnum
