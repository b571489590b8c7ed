#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compnum/digraph.hpp"
#include "compnum/graph.hpp"

namespace compnum {

/// C(D): x ~ y iff x != y and they share an out-neighbor in D.
Graph competition_graph(const Digraph& d);

/// Proof that G together with k isolated vertices is the competition graph of
/// an acyclic digraph.
///
/// `order` lists all n + k vertices; the added vertices n..n+k-1 occupy the
/// final k positions. `assignment[i]` is the in-neighborhood of the vertex at
/// position i: a clique of G whose members all sit at earlier positions.
/// Added vertices are prey only and never appear inside a clique.
struct ConstructionCertificate {
  Graph graph;
  int k = 0;
  std::vector<Vertex> order;
  std::vector<Clique> assignment;

  friend bool operator==(const ConstructionCertificate&, const ConstructionCertificate&) = default;
};

/// Arc (u, w) for every u in the clique assigned to w's position. Throws
/// CertificateError naming the offending position on a structural violation.
Digraph certificate_to_digraph(const ConstructionCertificate& cert);

struct CertificateCheck {
  bool valid = false;
  std::vector<std::string> violations;  // structural problems
  std::vector<Edge> missing;            // edges of G not produced by C(D)
  std::vector<Edge> surplus;            // edges of C(D) absent from G + I_k

  [[nodiscard]] std::string diagnostic() const;
};

/// Valid iff the certificate is structurally sound and
/// C(certificate_to_digraph(cert)) == G + I_k edge for edge.
CertificateCheck verify_certificate(const ConstructionCertificate& cert);

/// Greedy construction: vertices are placed from the last position backwards,
/// each time choosing the vertex whose not-yet-covered edges into the
/// remaining vertices need the fewest cliques. Always returns a valid
/// certificate; its k is an upper bound on k(G). Requires n <= 64.
ConstructionCertificate heuristic_upper_bound(const Graph& g);

struct ExactBudget {
  int max_vertices = 10;
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds max_time{10'000};
  /// When false the search starts at k = 0 and must itself find the optimum,
  /// ignoring the lower bounds and the heuristic certificate. Used to
  /// cross-check the search.
  bool use_bounds = true;
};

enum class ExactStatus { Exact, Inconclusive };

struct ExactResult {
  ExactStatus status = ExactStatus::Inconclusive;
  int lower = 0;  // k(G) >= lower
  int upper = 0;  // k(G) <= upper, witnessed by `certificate`
  ConstructionCertificate certificate;
  std::uint64_t nodes = 0;
  std::string reason;  // why the search stopped early

  [[nodiscard]] bool exact() const { return status == ExactStatus::Exact; }
};

/// Exact k(G): starts from best_lower_bound and tests k = lower, lower+1, ...
/// below the heuristic upper bound with a memoized search over reverse
/// placements and neighborhood clique covers. Exceeding the budget yields an
/// Inconclusive result with the bound sandwich, never a wrong exact claim.
ExactResult exact_competition_number(const Graph& g, const ExactBudget& budget = {});

/// Assigns the cliques chosen for each position to later slots and builds the
/// certificate. `placement` lists base vertices from the last position to the
/// first; `cliques_at[i]` are the cliques whose latest member is placement[i].
/// Returns nullopt if k added vertices are not enough.
std::optional<ConstructionCertificate> schedule_certificate(
    const Graph& g, const std::vector<Vertex>& placement,
    const std::vector<std::vector<Clique>>& cliques_at, int k);

/// Smallest k for which schedule_certificate succeeds on this placement.
int required_isolated(const std::vector<std::vector<Clique>>& cliques_at);

// JSON: {"graph": <graph JSON>, "k": int, "order": [...], "assignment": [[...], ...]}
ConstructionCertificate parse_certificate_json(std::string_view text);
std::string render_certificate_json(const ConstructionCertificate& cert);

}  // namespace compnum
