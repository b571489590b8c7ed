#include "compnum/competition.hpp"

#include <algorithm>
#include <string>

#include "compnum/cliques.hpp"
#include "compnum/error.hpp"
#include "compnum/set_cover.hpp"

namespace compnum {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Problems that prevent building the digraph at all.
std::vector<std::string> structural_violations(const ConstructionCertificate& cert) {
  std::vector<std::string> out;
  const int n = cert.graph.vertex_count();
  if (cert.k < 0) {
    out.push_back("k must be non-negative");
    return out;
  }
  const auto total = static_cast<std::size_t>(n + cert.k);
  if (cert.order.size() != total) {
    out.push_back("order lists " + std::to_string(cert.order.size()) + " vertices, expected n + k = " +
                  std::to_string(total));
    return out;
  }
  if (cert.assignment.size() != total) {
    out.push_back("assignment has " + std::to_string(cert.assignment.size()) +
                  " entries, expected n + k = " + std::to_string(total));
    return out;
  }
  std::vector<int> position(total, -1);
  for (std::size_t i = 0; i < total; ++i) {
    Vertex v = cert.order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= total) {
      out.push_back("order position " + std::to_string(i) + ": vertex " + std::to_string(v) +
                    " out of range");
      return out;
    }
    if (position[v] >= 0) {
      out.push_back("order position " + std::to_string(i) + ": vertex " + std::to_string(v) +
                    " repeated");
      return out;
    }
    position[v] = static_cast<int>(i);
    if ((v >= n) != (static_cast<int>(i) >= n)) {
      out.push_back("order position " + std::to_string(i) + ": added vertices must occupy the last k positions");
    }
  }
  for (std::size_t i = 0; i < total; ++i) {
    const std::string where =
        "position " + std::to_string(i) + " (vertex " + std::to_string(cert.order[i]) + ")";
    for (Vertex u : cert.assignment[i]) {
      if (u < 0 || static_cast<std::size_t>(u) >= total) {
        out.push_back(where + ": member " + std::to_string(u) + " out of range");
      } else if (u >= n) {
        out.push_back(where + ": added vertex " + std::to_string(u) + " used as a predator");
      } else if (position[u] >= static_cast<int>(i)) {
        out.push_back(where + ": prefix violation, member " + std::to_string(u) +
                      " is not placed earlier");
      }
    }
  }
  return out;
}

}  // namespace

Graph competition_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (Vertex prey = 0; prey < d.vertex_count(); ++prey) {
    auto preds = d.in_neighbors(prey);
    for (std::size_t i = 0; i < preds.size(); ++i)
      for (std::size_t j = i + 1; j < preds.size(); ++j) edges.push_back(make_edge(preds[i], preds[j]));
  }
  return Graph(d.vertex_count(), edges);
}

Digraph certificate_to_digraph(const ConstructionCertificate& cert) {
  auto violations = structural_violations(cert);
  if (!violations.empty()) throw CertificateError(violations.front());
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < cert.order.size(); ++i)
    for (Vertex u : cert.assignment[i]) arcs.push_back(Arc{u, cert.order[i]});
  return Digraph(cert.graph.vertex_count() + cert.k, arcs);
}

std::string CertificateCheck::diagnostic() const {
  if (valid) return "valid";
  std::string out;
  for (const auto& v : violations) out += v + "\n";
  for (const auto& e : missing) out += "missing edge " + edge_text(e) + "\n";
  for (const auto& e : surplus) out += "surplus edge " + edge_text(e) + "\n";
  return out;
}

CertificateCheck verify_certificate(const ConstructionCertificate& cert) {
  CertificateCheck check;
  check.violations = structural_violations(cert);
  if (!check.violations.empty()) return check;

  const Graph& g = cert.graph;
  for (std::size_t i = 0; i < cert.assignment.size(); ++i) {
    if (!is_clique(g, cert.assignment[i])) {
      check.violations.push_back("position " + std::to_string(i) + " (vertex " +
                                 std::to_string(cert.order[i]) + "): assigned set is not a clique");
    }
  }

  Digraph d = certificate_to_digraph(cert);
  if (!is_acyclic(d).acyclic) check.violations.push_back("digraph has a directed cycle");

  Graph produced = competition_graph(d);
  Graph expected = with_isolated_vertices(g, cert.k);
  std::set_difference(expected.edges().begin(), expected.edges().end(), produced.edges().begin(),
                      produced.edges().end(), std::back_inserter(check.missing));
  std::set_difference(produced.edges().begin(), produced.edges().end(), expected.edges().begin(),
                      expected.edges().end(), std::back_inserter(check.surplus));
  check.valid = check.violations.empty() && check.missing.empty() && check.surplus.empty();
  return check;
}

int required_isolated(const std::vector<std::vector<Clique>>& cliques_at) {
  // After i placements there are k + i usable slots.
  int cumulative = 0;
  int need = 0;
  for (std::size_t i = 0; i < cliques_at.size(); ++i) {
    cumulative += static_cast<int>(cliques_at[i].size());
    need = std::max(need, cumulative - static_cast<int>(i));
  }
  return need;
}

std::optional<ConstructionCertificate> schedule_certificate(
    const Graph& g, const std::vector<Vertex>& placement,
    const std::vector<std::vector<Clique>>& cliques_at, int k) {
  const int n = g.vertex_count();
  if (static_cast<int>(placement.size()) != n || cliques_at.size() != placement.size() || k < 0) {
    throw GraphError("placement must list every vertex once with its cliques");
  }
  ConstructionCertificate cert;
  cert.graph = g;
  cert.k = k;
  cert.order.resize(n + k);
  cert.assignment.assign(n + k, Clique{});
  for (int i = 0; i < n; ++i) cert.order[n - 1 - i] = placement[i];
  for (int j = 0; j < k; ++j) cert.order[n + j] = n + j;

  std::vector<int> free_slots;
  for (int j = k - 1; j >= 0; --j) free_slots.push_back(n + j);
  for (int i = 0; i < n; ++i) {
    if (i > 0) free_slots.push_back(n - i);  // the position just after placement[i]
    for (const Clique& c : cliques_at[i]) {
      if (free_slots.empty()) return std::nullopt;
      cert.assignment[free_slots.back()] = c;
      free_slots.pop_back();
    }
  }
  return cert;
}

ConstructionCertificate heuristic_upper_bound(const Graph& g) {
  require_mask_sized(g);
  const int n = g.vertex_count();
  Mask remaining = low_bits(n);
  std::vector<Mask> uncovered(n);
  for (Vertex v = 0; v < n; ++v) uncovered[v] = g.neighbor_mask(v);

  std::vector<Vertex> placement;
  std::vector<std::vector<Clique>> cliques_at;

  while (remaining != 0) {
    struct Choice {
      Vertex v = -1;
      std::vector<Mask> cliques;
      int newly_covered = 0;
    } best;

    for_each_bit(remaining, [&](int v) {
      Mask todo = uncovered[v] & remaining;
      Choice c;
      c.v = v;
      if (todo != 0) {
        auto candidates = maximal_clique_masks(g, g.neighbor_mask(v) & remaining);
        std::vector<Vertex> elements;
        for_each_bit(todo, [&](int u) { elements.push_back(u); });
        std::vector<DynBits> sets;
        for (Mask m : candidates) {
          DynBits s(elements.size());
          for (std::size_t i = 0; i < elements.size(); ++i)
            if (contains(m, elements[i])) s.set(i);
          sets.push_back(std::move(s));
        }
        DynBits target(elements.size());
        for (std::size_t i = 0; i < elements.size(); ++i) target.set(i);
        SetCoverSolver solver(elements.size(), std::move(sets));
        auto picked = solver.minimum_cover(target);
        for (std::size_t idx : picked.value()) c.cliques.push_back(candidates[idx] | bit(v));
        std::vector<Mask> scratch = uncovered;
        for (Mask m : c.cliques) {
          for_each_bit(m, [&](int a) {
            c.newly_covered += popcount(scratch[a] & remaining & m);
            scratch[a] &= ~m;
          });
        }
      }
      bool better = best.v < 0 || c.cliques.size() < best.cliques.size() ||
                    (c.cliques.size() == best.cliques.size() && c.newly_covered > best.newly_covered);
      if (better) best = std::move(c);
    });

    std::vector<Clique> chosen;
    for (Mask m : best.cliques) {
      for_each_bit(m, [&](int a) { uncovered[a] &= ~m; });
      chosen.push_back(VertexSet::from_mask(m));
    }
    placement.push_back(best.v);
    cliques_at.push_back(std::move(chosen));
    remaining &= ~bit(best.v);
  }

  int k = required_isolated(cliques_at);
  return *schedule_certificate(g, placement, cliques_at, k);
}

}  // namespace compnum
