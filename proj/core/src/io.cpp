#include "compnum/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "compnum/error.hpp"

namespace compnum {

namespace {

using nlohmann::json;

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

// Splits a line into integers; throws ParseError on anything else.
std::vector<long long> integers(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto token = line.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                       std::string(token) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

int checked_int(long long v, const std::string& what) {
  if (v < 0 || v > 1'000'000) throw ParseError(what + " out of range: " + std::to_string(v));
  return static_cast<int>(v);
}

json parse_json_object(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  return doc;
}

std::vector<std::pair<Vertex, Vertex>> pair_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("missing array field '") + key + "'");
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const json& item : doc[key]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw ParseError(std::string("entries of '") + key + "' must be [int, int] pairs");
    }
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

int vertex_count_field(const json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("missing integer field 'n'");
  }
  return checked_int(doc["n"].get<long long>(), "vertex count");
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, raw)) {
    ++line_no;
    auto nums = integers(strip_comment(raw), line_no);
    if (nums.empty()) continue;
    if (nums.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!have_header) {
      n = checked_int(nums[0], "vertex count");
      m = checked_int(nums[1], "edge count");
      have_header = true;
      continue;
    }
    if (static_cast<long long>(pairs.size()) == m) {
      throw ParseError("line " + std::to_string(line_no) + ": more edges than declared");
    }
    pairs.emplace_back(checked_int(nums[0], "endpoint"), checked_int(nums[1], "endpoint"));
  }
  if (!have_header) throw ParseError("missing 'n m' header");
  if (static_cast<long long>(pairs.size()) != m) {
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                     std::to_string(pairs.size()));
  }
  try {
    return make_graph(n, pairs);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph_json(std::string_view text) {
  json doc = parse_json_object(text);
  int n = vertex_count_field(doc);
  auto pairs = pair_list(doc, "edges");
  try {
    return make_graph(n, pairs);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

std::string render_graph_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump();
}

Digraph parse_digraph_json(std::string_view text) {
  json doc = parse_json_object(text);
  int n = vertex_count_field(doc);
  std::vector<Arc> arcs;
  for (auto [a, b] : pair_list(doc, "arcs")) arcs.push_back(Arc{a, b});
  try {
    return Digraph(n, arcs);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

std::string render_digraph_json(const Digraph& d) {
  nlohmann::ordered_json doc;
  doc["n"] = d.vertex_count();
  doc["arcs"] = nlohmann::ordered_json::array();
  for (const Arc& a : d.arcs()) doc["arcs"].push_back({a.from, a.to});
  return doc.dump();
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << contents;
}

Graph load_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

void save_graph(const std::filesystem::path& path, const Graph& g) {
  if (path.extension() == ".json") {
    write_file(path, render_graph_json(g) + "\n");
  } else {
    write_file(path, render_edge_list(g));
  }
}

}  // namespace compnum
