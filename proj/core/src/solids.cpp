#include "compnum/solids.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "compnum/bounds.hpp"
#include "compnum/cover.hpp"
#include "compnum/error.hpp"
#include "compnum/generators.hpp"
#include "compnum/isomorphism.hpp"

namespace compnum {

namespace {

// v1..v9 -> 0..8, vx vy vz -> 9 10 11, a b c d -> 12..15
constexpr Vertex kV1 = 0, kV2 = 1, kV3 = 2, kV4 = 3, kV5 = 4, kV6 = 5, kV7 = 6, kV8 = 7, kV9 = 8;
constexpr Vertex kVx = 9, kVy = 10, kVz = 11;
constexpr Vertex kA = 12, kB = 13, kC = 14, kD = 15;

constexpr std::array<std::array<Vertex, 3>, 12> kTriangles{{
    {kV1, kV2, kV3},  // S1
    {kV1, kV2, kV4},  // S2
    {kV2, kV5, kV6},  // S3
    {kV5, kV6, kV7},  // S4
    {kV4, kV6, kV8},  // S5
    {kV4, kV8, kVy},  // S6
    {kV7, kV8, kV9},  // S7
    {kV7, kV9, kVx},  // S8
    {kV9, kVy, kVz},  // S9
    {kV1, kVy, kVz},  // S10
    {kV3, kVx, kVz},  // S11
    {kV3, kV5, kVx},  // S12
}};

constexpr std::array<Vertex, 12> kPrey{kA, kV3, kV1, kV2, kV5, kV6, kV4, kV8, kV7, kB, kC, kD};

// An acyclic ordering of the construction's digraph.
constexpr std::array<Vertex, 16> kOrder{kVx, kVy, kVz, kV9, kV7, kV8, kV4, kV6,
                                        kV5, kV2, kV1, kV3, kA,  kB,  kC,  kD};

}  // namespace

std::vector<Clique> icosahedron_triangles() {
  std::vector<Clique> out;
  for (const auto& t : kTriangles) out.push_back(VertexSet{t[0], t[1], t[2]});
  return out;
}

std::vector<Vertex> icosahedron_prey() { return {kPrey.begin(), kPrey.end()}; }

Graph labelled_icosahedron() {
  std::vector<Edge> edges;
  for (const auto& t : kTriangles) {
    edges.push_back(make_edge(t[0], t[1]));
    edges.push_back(make_edge(t[0], t[2]));
    edges.push_back(make_edge(t[1], t[2]));
  }
  return Graph(12, edges);
}

ConstructionCertificate icosahedron_certificate() {
  ConstructionCertificate cert;
  cert.graph = labelled_icosahedron();
  cert.k = 4;
  cert.order.assign(kOrder.begin(), kOrder.end());
  cert.assignment.assign(kOrder.size(), Clique{});
  auto triangles = icosahedron_triangles();
  for (std::size_t i = 0; i < kOrder.size(); ++i) {
    auto it = std::find(kPrey.begin(), kPrey.end(), kOrder[i]);
    if (it != kPrey.end()) cert.assignment[i] = triangles[it - kPrey.begin()];
  }
  return cert;
}

std::string icosahedron_label(Vertex v) {
  if (v >= 0 && v <= 8) return "v" + std::to_string(v + 1);
  static constexpr std::array<const char*, 7> names{"vx", "vy", "vz", "a", "b", "c", "d"};
  if (v >= 9 && v <= 15) return names[v - 9];
  return std::to_string(v);
}

std::string three_subset_type(const Graph& g, const VertexSet& subset) {
  if (subset.size() != 3) throw GraphError("expected a 3-subset");
  int edges = g.adjacent(subset[0], subset[1]) + g.adjacent(subset[0], subset[2]) +
              g.adjacent(subset[1], subset[2]);
  switch (edges) {
    case 3: return "K3";
    case 2: return "P3";
    case 1: return "K2+I1";
    default: return "I3";
  }
}

bool SolidsReport::all_ok() const {
  bool rows_ok = std::all_of(rows.begin(), rows.end(), [](const SolidRow& r) { return r.ok; });
  bool cases_ok = std::all_of(local_cases.begin(), local_cases.end(), [](const LocalCaseRow& r) { return r.ok; });
  return rows_ok && theta_e_ok && cases_ok && certificate_ok && local_cases.size() == 4;
}

SolidsReport reproduce_solids() {
  SolidsReport report;

  auto exact_and_closed = [&](const std::string& name, const Graph& g, int expected,
                              std::optional<int> closed, const std::string& closed_name) {
    ExactResult exact = exact_competition_number(g);
    report.nodes += exact.nodes;
    SolidRow row{name, expected, exact.exact() ? exact.upper : -1, "", false};
    bool cert_ok = verify_certificate(exact.certificate).valid;
    row.method = "exact search " + (exact.exact() ? std::to_string(exact.upper) : std::string("inconclusive")) +
                 ", " + closed_name + " " + (closed ? std::to_string(*closed) : std::string("n/a"));
    row.ok = exact.exact() && cert_ok && closed && *closed == exact.upper && exact.upper == expected;
    report.rows.push_back(row);
  };
  auto closed_only = [&](const std::string& name, int expected, std::optional<int> closed,
                         const std::string& closed_name) {
    SolidRow row{name, expected, closed.value_or(-1), closed_name, closed && *closed == expected};
    report.rows.push_back(row);
  };

  exact_and_closed("tetrahedron", tetrahedron(), 1, chordal_exact(tetrahedron()), "chordal closed form");
  closed_only("hexahedron", 6, triangle_free_exact(hexahedron()), "triangle-free closed form");
  {
    Graph o = octahedron();
    auto part = balanced_tripartite_part_size(o);
    exact_and_closed("octahedron", o, 2, part ? tripartite_exact(*part) : std::nullopt,
                     "K_{n,n,n} closed form");
  }
  closed_only("dodecahedron", 12, triangle_free_exact(dodecahedron()), "triangle-free closed form");

  Graph ico = icosahedron();
  SubsetBound subset = subset_bound(ico, 3);
  report.subset_m3 = subset.value;
  ConstructionCertificate cert = icosahedron_certificate();
  report.certificate_ok = verify_certificate(cert).valid && are_isomorphic(cert.graph, ico);
  {
    bool sandwich = report.certificate_ok && subset.value == cert.k;
    SolidRow row{"icosahedron", 4, sandwich ? cert.k : -1,
                 "lower bound m=3 gives " + std::to_string(subset.value) + ", verified certificate gives " +
                     std::to_string(cert.k),
                 sandwich && cert.k == 4};
    report.rows.push_back(row);
  }

  CoverResult theta = theta_edge(ico);
  report.icosahedron_theta_e = theta.value;
  report.theta_e_ok = theta.value == 12 && theta.witness.size() == 12 && is_valid_cover(ico, theta.witness);

  const std::map<std::string, int> expected_case{{"K3", 6}, {"P3", 6}, {"K2+I1", 7}, {"I3", 9}};
  std::map<std::string, LocalCaseRow> cases;
  for (Vertex a = 0; a < 12; ++a)
    for (Vertex b = a + 1; b < 12; ++b)
      for (Vertex c = b + 1; c < 12; ++c) {
        VertexSet u{a, b, c};
        std::string type = three_subset_type(ico, u);
        auto& row = cases[type];
        row.induced_type = type;
        ++row.subsets;
        int value = local_cover_number(ico, u);
        if (std::find(row.values.begin(), row.values.end(), value) == row.values.end()) row.values.push_back(value);
      }
  for (const char* type : {"K3", "P3", "K2+I1", "I3"}) {
    LocalCaseRow row = cases[type];
    row.induced_type = type;
    row.expected = expected_case.at(type);
    std::sort(row.values.begin(), row.values.end());
    row.ok = row.values == std::vector<int>{row.expected};
    report.local_cases.push_back(row);
  }
  return report;
}

}  // namespace compnum
