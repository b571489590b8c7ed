#include "compnum/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "compnum/error.hpp"

namespace compnum {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw GraphError(message);
}

void require_params(const FamilySpec& f, std::size_t count) {
  require(f.params.size() == count, "family '" + f.name + "' takes " + std::to_string(count) +
                                        " parameter(s), got " + std::to_string(f.params.size()));
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph complete_multipartite_graph(const std::vector<int>& part_sizes) {
  require(!part_sizes.empty(), "multipartite graph needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    require(part_sizes[p] >= 1, "every part must have at least one vertex");
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph generalized_petersen_graph(int n, int k) {
  require(n >= 3, "generalized Petersen graph needs n >= 3");
  require(k >= 1 && 2 * k < n, "generalized Petersen graph needs 1 <= k < n/2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(make_edge(i, (i + 1) % n));
    edges.push_back(make_edge(i, n + i));
    edges.push_back(make_edge(n + i, n + (i + k) % n));
  }
  return Graph(2 * n, edges);
}

Graph tetrahedron() { return complete_graph(4); }

Graph hexahedron() { return generalized_petersen_graph(4, 1); }

Graph octahedron() {
  // Vertices i and i+3 are antipodal.
  std::vector<Edge> edges;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) edges.push_back({u, v});
  return Graph(6, edges);
}

Graph dodecahedron() { return generalized_petersen_graph(10, 2); }

Graph icosahedron() {
  constexpr int top = 0;
  constexpr int bottom = 11;
  auto upper = [](int i) { return 1 + (i % 5); };
  auto lower = [](int i) { return 6 + (i % 5); };
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(top, upper(i)));
    edges.push_back(make_edge(bottom, lower(i)));
    edges.push_back(make_edge(upper(i), upper(i + 1)));
    edges.push_back(make_edge(lower(i), lower(i + 1)));
    edges.push_back(make_edge(upper(i), lower(i)));
    edges.push_back(make_edge(upper(i), lower(i + 1)));
  }
  return Graph(12, edges);
}

Graph generate(const FamilySpec& f) {
  const std::string& name = f.name;
  auto solid = [&](Graph (*make)()) {
    require_params(f, 0);
    return make();
  };
  if (name == "tetrahedron") return solid(tetrahedron);
  if (name == "hexahedron" || name == "cube") return solid(hexahedron);
  if (name == "octahedron") return solid(octahedron);
  if (name == "dodecahedron") return solid(dodecahedron);
  if (name == "icosahedron") return solid(icosahedron);
  if (name == "complete" || name == "cycle" || name == "path") require_params(f, 1);
  if (name == "complete") return complete_graph(f.params[0]);
  if (name == "cycle") return cycle_graph(f.params[0]);
  if (name == "path") return path_graph(f.params[0]);
  if (name == "tripartite") {
    require_params(f, 1);
    require(f.params[0] >= 1, "tripartite needs part size >= 1");
    return complete_multipartite_graph({f.params[0], f.params[0], f.params[0]});
  }
  if (name == "multipartite" || name == "complete_multipartite") {
    return complete_multipartite_graph(f.params);
  }
  if (name == "petersen") {
    require_params(f, 2);
    return generalized_petersen_graph(f.params[0], f.params[1]);
  }
  throw GraphError("unknown graph family '" + name + "'");
}

std::vector<std::string_view> family_names() {
  return {"tetrahedron", "hexahedron", "cube",  "octahedron", "dodecahedron", "icosahedron",
          "complete",    "tripartite", "multipartite", "cycle", "path",         "petersen"};
}

}  // namespace compnum
