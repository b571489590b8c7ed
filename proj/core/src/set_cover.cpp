#include "compnum/set_cover.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace compnum {

bool DynBits::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t DynBits::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool DynBits::intersects(const DynBits& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool DynBits::is_subset_of(const DynBits& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

DynBits& DynBits::operator|=(const DynBits& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

DynBits& DynBits::subtract(const DynBits& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t DynBits::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::size_t DynBits::next(std::size_t after) const {
  std::size_t i = after + 1;
  if (i >= size_) return size_;
  std::size_t w = i >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

std::size_t DynBits::hash() const {
  std::size_t h = size_;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

struct MemoKey {
  DynBits uncovered;
  std::size_t min_index;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const { return k.uncovered.hash() ^ (k.min_index * 0x100000001b3ULL); }
};

}  // namespace

struct SetCoverSolverMemo {
  // largest budget known to be insufficient for (uncovered, min_index)
  std::unordered_map<MemoKey, std::size_t, MemoHash> failed;
};

SetCoverSolver::SetCoverSolver(std::size_t universe, std::vector<DynBits> sets)
    : universe_(universe), sets_(std::move(sets)), containing_(universe),
      memo_(std::make_unique<SetCoverSolverMemo>()) {
  for (std::size_t s = 0; s < sets_.size(); ++s)
    for (std::size_t e = sets_[s].first(); e < universe_; e = sets_[s].next(e)) containing_[e].push_back(s);
}

SetCoverSolver::~SetCoverSolver() = default;
SetCoverSolver::SetCoverSolver(SetCoverSolver&&) noexcept = default;
SetCoverSolver& SetCoverSolver::operator=(SetCoverSolver&&) noexcept = default;

bool SetCoverSolver::coverable(const DynBits& target) const {
  for (std::size_t e = target.first(); e < universe_; e = target.next(e))
    if (containing_[e].empty()) return false;
  return true;
}

std::size_t SetCoverSolver::packing_bound(const DynBits& uncovered, std::size_t min_index) const {
  // Elements pairwise never inside a common allowed set each need their own set.
  DynBits blocked(universe_);
  std::size_t packed = 0;
  for (std::size_t e = uncovered.first(); e < universe_; e = uncovered.next(e)) {
    if (blocked.test(e)) continue;
    ++packed;
    const auto& sets = containing_[e];
    for (auto it = std::lower_bound(sets.begin(), sets.end(), min_index); it != sets.end(); ++it) {
      blocked |= sets_[*it];
    }
  }
  return packed;
}

bool SetCoverSolver::decide(const DynBits& uncovered, std::size_t budget, std::size_t min_index) {
  ++stats_.nodes;
  if (uncovered.none()) return true;
  if (budget == 0) return false;

  MemoKey key{uncovered, min_index};
  if (auto it = memo_->failed.find(key); it != memo_->failed.end() && budget <= it->second) return false;

  // Branch on the uncovered element with the fewest allowed sets.
  std::size_t branch_element = universe_;
  std::size_t fewest = sets_.size() + 1;
  for (std::size_t e = uncovered.first(); e < universe_; e = uncovered.next(e)) {
    const auto& sets = containing_[e];
    auto options = static_cast<std::size_t>(sets.end() - std::lower_bound(sets.begin(), sets.end(), min_index));
    if (options < fewest) {
      fewest = options;
      branch_element = e;
      if (options <= 1) break;
    }
  }

  bool found = false;
  if (fewest > 0 && packing_bound(uncovered, min_index) <= budget) {
    const auto& sets = containing_[branch_element];
    for (auto it = std::lower_bound(sets.begin(), sets.end(), min_index); it != sets.end(); ++it) {
      DynBits rest = uncovered;
      rest.subtract(sets_[*it]);
      if (decide(rest, budget - 1, min_index)) {
        found = true;
        break;
      }
    }
  }
  if (!found) {
    auto& slot = memo_->failed[key];
    slot = std::max(slot, budget);
  }
  return found;
}

std::optional<std::size_t> SetCoverSolver::minimum_size(const DynBits& target) {
  if (!coverable(target)) return std::nullopt;
  for (std::size_t budget = packing_bound(target, 0);; ++budget) {
    if (decide(target, budget, 0)) return budget;
  }
}

std::optional<std::vector<std::size_t>> SetCoverSolver::minimum_cover(const DynBits& target) {
  auto optimum = minimum_size(target);
  if (!optimum) return std::nullopt;

  // Fix the smallest feasible index at each step: the lexicographically least
  // sorted index list among minimum covers.
  std::vector<std::size_t> picked;
  DynBits uncovered = target;
  std::size_t start = 0;
  for (std::size_t step = 0; step < *optimum; ++step) {
    for (std::size_t c = start; c < sets_.size(); ++c) {
      if (!sets_[c].intersects(uncovered)) continue;
      DynBits rest = uncovered;
      rest.subtract(sets_[c]);
      if (decide(rest, *optimum - step - 1, c + 1)) {
        picked.push_back(c);
        uncovered = std::move(rest);
        start = c + 1;
        break;
      }
    }
  }
  return picked;
}

}  // namespace compnum
