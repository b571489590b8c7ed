#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace compnum {

/// Fixed-size bitset over a set-cover universe.
class DynBits {
 public:
  DynBits() = default;
  explicit DynBits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  [[nodiscard]] std::size_t size() const { return size_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  [[nodiscard]] bool none() const;
  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] bool intersects(const DynBits& other) const;
  [[nodiscard]] bool is_subset_of(const DynBits& other) const;
  DynBits& operator|=(const DynBits& other);
  DynBits& subtract(const DynBits& other);
  /// Index of the lowest set bit, or size() when empty.
  [[nodiscard]] std::size_t first() const;
  [[nodiscard]] std::size_t next(std::size_t after) const;
  [[nodiscard]] std::size_t hash() const;

  friend bool operator==(const DynBits&, const DynBits&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SetCoverSolverMemo;

struct SetCoverStats {
  std::uint64_t nodes = 0;
};

/// Exact minimum set cover by iterative deepening branch-and-bound.
///
/// Branches on the uncovered element with the fewest candidate sets and
/// prunes with a greedy packing of elements that no single candidate covers
/// together. The returned indices are the lexicographically least sorted
/// index list among all minimum covers. Returns nullopt when some element of
/// `target` lies in no set.
class SetCoverSolver {
 public:
  SetCoverSolver(std::size_t universe, std::vector<DynBits> sets);
  ~SetCoverSolver();
  SetCoverSolver(SetCoverSolver&&) noexcept;
  SetCoverSolver& operator=(SetCoverSolver&&) noexcept;

  [[nodiscard]] std::optional<std::vector<std::size_t>> minimum_cover(const DynBits& target);

  /// Minimum size only, no lexicographic witness refinement.
  [[nodiscard]] std::optional<std::size_t> minimum_size(const DynBits& target);

  [[nodiscard]] const SetCoverStats& stats() const { return stats_; }

 private:
  bool decide(const DynBits& uncovered, std::size_t budget, std::size_t min_index);
  std::size_t packing_bound(const DynBits& uncovered, std::size_t min_index) const;
  bool coverable(const DynBits& target) const;

  std::size_t universe_;
  std::vector<DynBits> sets_;
  std::vector<std::vector<std::size_t>> containing_;  // element -> set indices
  SetCoverStats stats_;
  std::unique_ptr<SetCoverSolverMemo> memo_;
};

}  // namespace compnum
