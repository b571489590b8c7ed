#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "compnum/bits.hpp"

namespace compnum {

using Vertex = int;

/// Sorted, duplicate-free set of vertex labels. Used for subsets U, closed
/// neighborhoods and clique members.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet from_mask(Mask mask);
  static VertexSet range(int n);  // {0, ..., n-1}

  [[nodiscard]] Mask to_mask() const;  // requires all members < 64

  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] Vertex max() const { return members_.back(); }
  [[nodiscard]] bool is_subset_of(const VertexSet& other) const;

  [[nodiscard]] std::span<const Vertex> members() const { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// A vertex subset inducing a complete subgraph of its host graph. Carries no
/// reference to the host; use is_clique() to validate against one.
using Clique = VertexSet;

}  // namespace compnum
