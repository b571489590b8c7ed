#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "compnum/graph.hpp"

namespace compnum {

Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);   // n >= 1 vertices
Graph complete_multipartite_graph(const std::vector<int>& part_sizes);

/// GP(n, k): outer cycle 0..n-1, inner vertices n..2n-1 with spokes i -- n+i
/// and inner edges n+i -- n+(i+k mod n). Requires n >= 3 and 1 <= k < n/2.
Graph generalized_petersen_graph(int n, int k);

/// The five Platonic-solid skeletons.
Graph tetrahedron();   // K_4
Graph hexahedron();    // 3-cube, GP(4,1)
Graph octahedron();    // three antipodal pairs, every other pair adjacent
Graph dodecahedron();  // GP(10,2)

/// Gyroelongated pentagonal bipyramid: top apex 0, upper ring 1..5,
/// lower ring 6..10, bottom apex 11. Upper u_i is joined to lower l_i and
/// l_{i+1}.
Graph icosahedron();

/// A named family with integer parameters, e.g. {"complete", {4}}.
struct FamilySpec {
  std::string name;
  std::vector<int> params;
};

/// Recognized names: tetrahedron, hexahedron (cube), octahedron, dodecahedron,
/// icosahedron, complete n, tripartite n (K_{n,n,n}), multipartite a b ...,
/// cycle n, path n, petersen n k. Throws GraphError on an unknown family or a
/// bad parameter list.
Graph generate(const FamilySpec& family);

/// Names accepted by generate(), for help text.
std::vector<std::string_view> family_names();

}  // namespace compnum
