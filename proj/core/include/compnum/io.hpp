#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "compnum/digraph.hpp"
#include "compnum/graph.hpp"

namespace compnum {

// Edge-list text: first line "n m", then m lines "u v"; blank lines and '#'
// comments are ignored.
Graph parse_edge_list(std::string_view text);
std::string render_edge_list(const Graph& g);

// JSON: {"n": int, "edges": [[u,v],...]} and {"n": int, "arcs": [[u,v],...]}.
// Rendering is deterministic (sorted, compact).
Graph parse_graph_json(std::string_view text);
std::string render_graph_json(const Graph& g);
Digraph parse_digraph_json(std::string_view text);
std::string render_digraph_json(const Digraph& d);

/// Parses JSON when the first non-blank character is '{', else edge-list.
Graph parse_graph(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Reads a graph file; format chosen by content (see parse_graph).
Graph load_graph(const std::filesystem::path& path);
/// Writes JSON for a ".json" extension, edge-list otherwise.
void save_graph(const std::filesystem::path& path, const Graph& g);

}  // namespace compnum
