#include "compnum/vertex_set.hpp"

#include <algorithm>

#include "compnum/error.hpp"

namespace compnum {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(Mask mask) {
  std::vector<Vertex> out;
  out.reserve(popcount(mask));
  for_each_bit(mask, [&](int v) { out.push_back(v); });
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.members_.resize(n);
  for (int i = 0; i < n; ++i) s.members_[i] = i;
  return s;
}

Mask VertexSet::to_mask() const {
  Mask m = 0;
  for (Vertex v : members_) {
    if (v < 0 || v >= kMaxMaskVertices) {
      throw GraphError("vertex " + std::to_string(v) + " does not fit a 64-bit mask");
    }
    m |= bit(v);
  }
  return m;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

}  // namespace compnum
