#include <json.hpp>

#include "compnum/competition.hpp"
#include "compnum/error.hpp"
#include "compnum/io.hpp"

namespace compnum {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<Vertex> int_list(const json& value, const std::string& what) {
  if (!value.is_array()) throw ParseError(what + " must be an array of integers");
  std::vector<Vertex> out;
  for (const json& item : value) {
    if (!item.is_number_integer()) throw ParseError(what + " must be an array of integers");
    out.push_back(item.get<Vertex>());
  }
  return out;
}

}  // namespace

ConstructionCertificate parse_certificate_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("certificate must be a JSON object");
  for (const char* key : {"graph", "k", "order", "assignment"}) {
    if (!doc.contains(key)) throw ParseError(std::string("certificate is missing '") + key + "'");
  }
  if (!doc["k"].is_number_integer()) throw ParseError("'k' must be an integer");
  if (!doc["assignment"].is_array()) throw ParseError("'assignment' must be an array of arrays");

  ConstructionCertificate cert;
  cert.graph = parse_graph_json(doc["graph"].dump());
  cert.k = doc["k"].get<int>();
  cert.order = int_list(doc["order"], "'order'");
  for (const json& clique : doc["assignment"]) {
    cert.assignment.emplace_back(int_list(clique, "each assignment entry"));
  }
  return cert;
}

std::string render_certificate_json(const ConstructionCertificate& cert) {
  ordered_json doc;
  doc["graph"] = ordered_json::parse(render_graph_json(cert.graph));
  doc["k"] = cert.k;
  doc["order"] = cert.order;
  doc["assignment"] = ordered_json::array();
  for (const Clique& c : cert.assignment) {
    doc["assignment"].push_back(std::vector<Vertex>(c.begin(), c.end()));
  }
  return doc.dump();
}

}  // namespace compnum
