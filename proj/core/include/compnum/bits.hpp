#pragma once

#include <bit>
#include <cstdint>

namespace compnum {

/// Vertex bitset used by the exponential solvers; bit i is vertex i.
using Mask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }
constexpr bool contains(Mask m, int v) { return (m >> v) & 1U; }

/// Calls f(v) for each set bit, ascending.
template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace compnum
