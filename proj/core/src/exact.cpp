#include "compnum/bounds.hpp"
#include "compnum/cliques.hpp"
#include "compnum/competition.hpp"
#include "compnum/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace compnum {

namespace {

// Search state: vertices not yet placed (counting from the last position
// backwards) and, for each of them, its neighbors in `remaining` whose edge
// is still uncovered.
struct State {
  Mask remaining = 0;
  std::vector<Mask> uncovered;

  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::size_t h = std::hash<Mask>{}(s.remaining);
    for (Mask m : s.uncovered) h ^= std::hash<Mask>{}(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Step {
  Vertex vertex = 0;
  std::vector<Mask> cliques;  // each includes `vertex`
};

class ExactSearch {
 public:
  ExactSearch(const Graph& g, const ExactBudget& budget)
      : g_(g), budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Can the placement be completed starting with `slack` spare slots?
  bool feasible(int slack) {
    State s;
    s.remaining = low_bits(g_.vertex_count());
    s.uncovered.resize(g_.vertex_count());
    for (Vertex v = 0; v < g_.vertex_count(); ++v) s.uncovered[v] = g_.neighbor_mask(v);
    trail_.clear();
    bool ok = search(std::move(s), slack);
    std::reverse(trail_.begin(), trail_.end());
    return ok;
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::string& reason() const { return reason_; }
  const std::vector<Step>& trail() const { return trail_; }

 private:
  bool out_of_budget() {
    if (aborted_) return true;
    if (nodes_ > budget_.max_nodes) {
      aborted_ = true;
      reason_ = "node budget exhausted";
    } else if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_time) {
      aborted_ = true;
      reason_ = "time budget exhausted";
    }
    return aborted_;
  }

  // Greedy packing of uncovered edges no two of which fit in one clique.
  int packing_bound(const State& s) const {
    std::vector<Mask> packed;  // endpoint pairs
    int count = 0;
    for_each_bit(s.remaining, [&](int a) {
      for_each_bit(s.uncovered[a] & ~low_bits(a + 1), [&](int b) {
        Mask e = bit(a) | bit(b);
        bool fits_with_some = std::any_of(packed.begin(), packed.end(), [&](Mask f) {
          Mask u = e | f;
          bool clique = true;
          for_each_bit(u, [&](int x) { clique = clique && ((g_.neighbor_mask(x) | bit(x)) & u) == u; });
          return clique;
        });
        if (!fits_with_some) {
          packed.push_back(e);
          ++count;
        }
      });
    });
    return count;
  }

  // Irredundant families of at most `limit` cliques from `candidates` covering
  // `target`.
  static std::vector<std::vector<Mask>> covers(Mask target, const std::vector<Mask>& candidates, int limit) {
    std::set<std::vector<Mask>> found;
    std::vector<Mask> current;
    auto recurse = [&](auto&& self, Mask left) -> void {
      if (left == 0) {
        for (std::size_t i = 0; i < current.size(); ++i) {
          Mask others = 0;
          for (std::size_t j = 0; j < current.size(); ++j)
            if (j != i) others |= current[j];
          if ((current[i] & target & ~others) == 0) return;
        }
        std::vector<Mask> key = current;
        std::sort(key.begin(), key.end());
        found.insert(std::move(key));
        return;
      }
      if (static_cast<int>(current.size()) == limit) return;
      int u = lowest(left);
      for (Mask c : candidates) {
        if (!contains(c, u)) continue;
        current.push_back(c);
        self(self, left & ~c);
        current.pop_back();
      }
    };
    recurse(recurse, target);
    std::vector<std::vector<Mask>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
  }

  bool search(State s, int slack) {
    ++nodes_;
    if (out_of_budget()) return false;

    // A vertex whose edges into the remaining set are all covered can be
    // placed now at no cost.
    std::vector<Step> free_steps;
    for (bool progress = true; progress;) {
      progress = false;
      for_each_bit(s.remaining, [&](int v) {
        if (!progress && (s.uncovered[v] & s.remaining) == 0) {
          s.remaining &= ~bit(v);
          s.uncovered[v] = 0;
          ++slack;
          free_steps.push_back(Step{v, {}});
          progress = true;
        }
      });
    }
    auto commit_free = [&] {
      for (auto it = free_steps.rbegin(); it != free_steps.rend(); ++it) trail_.push_back(*it);
    };
    if (s.remaining == 0) {
      commit_free();
      return true;
    }

    if (auto it = failed_.find(s); it != failed_.end() && slack <= it->second) return false;
    if (packing_bound(s) > slack + popcount(s.remaining) - 1) {
      remember_failure(s, slack);
      return false;
    }

    bool ok = false;
    for_each_bit(s.remaining, [&](int v) {
      if (ok || aborted_) return;
      Mask target = s.uncovered[v] & s.remaining;
      if (target == 0 || slack == 0) return;
      auto candidates = maximal_clique_masks(g_, g_.neighbor_mask(v) & s.remaining);
      for (const auto& family : covers(target, candidates, slack)) {
        State next = s;
        next.remaining &= ~bit(v);
        for (Mask c : family) {
          Mask clique = c | bit(v);
          for_each_bit(clique, [&](int a) { next.uncovered[a] &= ~clique; });
        }
        next.uncovered[v] = 0;
        for_each_bit(next.remaining, [&](int a) { next.uncovered[a] &= next.remaining; });
        if (search(std::move(next), slack - static_cast<int>(family.size()) + 1)) {
          Step step{v, {}};
          for (Mask c : family) step.cliques.push_back(c | bit(v));
          trail_.push_back(std::move(step));
          ok = true;
          return;
        }
        if (aborted_) return;
      }
    });
    if (ok) {
      commit_free();
      return true;
    }
    if (!aborted_) remember_failure(s, slack);
    return false;
  }

  void remember_failure(const State& s, int slack) {
    auto [it, inserted] = failed_.try_emplace(s, slack);
    if (!inserted) it->second = std::max(it->second, slack);
  }

  const Graph& g_;
  ExactBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::unordered_map<State, int, StateHash> failed_;  // largest slack known to fail
  std::vector<Step> trail_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::string reason_;
};

ConstructionCertificate certificate_from_trail(const Graph& g, const std::vector<Step>& trail, int k) {
  std::vector<Vertex> placement;
  std::vector<std::vector<Clique>> cliques_at;
  for (const Step& step : trail) {
    placement.push_back(step.vertex);
    std::vector<Clique> cliques;
    for (Mask m : step.cliques) cliques.push_back(VertexSet::from_mask(m));
    cliques_at.push_back(std::move(cliques));
  }
  auto cert = schedule_certificate(g, placement, cliques_at, k);
  if (!cert) throw GraphError("internal: search trail does not fit in k slots");
  return *cert;
}

}  // namespace

ExactResult exact_competition_number(const Graph& g, const ExactBudget& budget) {
  ExactResult result;
  const int n = g.vertex_count();
  if (n == 0) {
    result.status = ExactStatus::Exact;
    result.certificate.graph = g;
    return result;
  }
  require_mask_sized(g);

  result.lower = best_lower_bound(g, std::min(3, n)).best_lower;
  result.certificate = heuristic_upper_bound(g);
  result.upper = result.certificate.k;

  if (n > budget.max_vertices) {
    result.reason = "graph has " + std::to_string(n) + " vertices, budget allows " +
                    std::to_string(budget.max_vertices);
    if (result.lower == result.upper) {
      result.status = ExactStatus::Exact;
      result.reason.clear();
    }
    return result;
  }

  ExactSearch search(g, budget);
  if (!budget.use_bounds) result.lower = 0;
  for (int k = result.lower; !budget.use_bounds || k < result.upper; ++k) {
    bool ok = search.feasible(k);
    result.nodes = search.nodes();
    if (search.aborted()) {
      result.lower = k;
      result.reason = search.reason();
      return result;
    }
    if (ok) {
      result.certificate = certificate_from_trail(g, search.trail(), k);
      result.upper = k;
      break;
    }
    result.lower = k + 1;
  }
  result.lower = result.upper;
  result.status = ExactStatus::Exact;
  return result;
}

}  // namespace compnum
