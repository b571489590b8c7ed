#pragma once

#include <string>
#include <vector>

#include "compnum/competition.hpp"
#include "compnum/graph.hpp"

namespace compnum {

/// Icosahedron labelled for the twelve-triangle construction:
/// v1..v9 -> 0..8, vx vy vz -> 9 10 11; added vertices a b c d -> 12..15.
/// Its edges are exactly the pairs inside the twelve triangles.
Graph labelled_icosahedron();

/// The twelve triangles S1..S12 of the construction, in that order.
std::vector<Clique> icosahedron_triangles();

/// Prey of each triangle S1..S12, in the labelling above.
std::vector<Vertex> icosahedron_prey();

/// Certificate for k(icosahedron) <= 4 built from the triangles and prey.
ConstructionCertificate icosahedron_certificate();

/// Human-readable label for the fixture's vertex ids (v1, ..., vz, a, ..., d).
std::string icosahedron_label(Vertex v);

struct SolidRow {
  std::string name;
  int expected = 0;
  int computed = -1;
  std::string method;  // how the value was established
  bool ok = false;
};

struct LocalCaseRow {
  std::string induced_type;  // K3, P3, K2+I1, I3
  int subsets = 0;
  int expected = 0;
  std::vector<int> values;  // distinct values observed over the subsets
  bool ok = false;
};

struct SolidsReport {
  std::vector<SolidRow> rows;
  int icosahedron_theta_e = -1;
  bool theta_e_ok = false;
  std::vector<LocalCaseRow> local_cases;
  int subset_m3 = 0;
  bool certificate_ok = false;
  std::uint64_t nodes = 0;

  [[nodiscard]] bool all_ok() const;
};

/// Recomputes k for the five Platonic solids, theta_E of the icosahedron and
/// the per-type local cover table over all 3-subsets of the icosahedron.
SolidsReport reproduce_solids();

/// Classifies a 3-subset by the graph it induces: "K3", "P3", "K2+I1", "I3".
std::string three_subset_type(const Graph& g, const VertexSet& subset);

}  // namespace compnum
