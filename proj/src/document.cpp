#include "hyperhom/document.hpp"

namespace hyperhom {

namespace {

using json = nlohmann::json;

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(where + "[" + std::to_string(i) + "] must be a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

}  // namespace

HypergraphDocument read_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");

  HypergraphDocument doc;
  if (auto it = j.find("name"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw ParseError("\"name\" must be a string");
    doc.name = it->get<std::string>();
  }
  auto vertices = j.find("vertices");
  if (vertices == j.end()) throw ParseError("missing \"vertices\"");
  doc.vertices = string_list(*vertices, "vertices");

  auto edges = j.find("edges");
  if (edges == j.end()) throw ParseError("missing \"edges\"");
  if (!edges->is_array()) throw ParseError("\"edges\" must be an array");
  for (std::size_t i = 0; i < edges->size(); ++i) {
    const json& e = (*edges)[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(where + " must be an object");
    NamedEdge edge;
    auto tails = e.find("tails");
    auto heads = e.find("heads");
    if (tails == e.end()) throw ParseError(where + " is missing \"tails\"");
    if (heads == e.end()) throw ParseError(where + " is missing \"heads\"");
    edge.tails = string_list(*tails, where + ".tails");
    edge.heads = string_list(*heads, where + ".heads");
    doc.edges.push_back(std::move(edge));
  }
  return doc;
}

OrientedHypergraph to_hypergraph(const HypergraphDocument& doc) {
  return OrientedHypergraph::from_names(doc.vertices, doc.edges);
}

OrientedHypergraph parse_document(std::string_view text) { return to_hypergraph(read_document(text)); }

HypergraphDocument to_document(const OrientedHypergraph& h, std::optional<std::string> name) {
  HypergraphDocument doc;
  doc.name = std::move(name);
  doc.vertices = h.vertices();
  for (const Edge& e : h.edges()) {
    NamedEdge ne;
    for (std::size_t v : e.tails) ne.tails.push_back(h.vertex(v));
    for (std::size_t v : e.heads) ne.heads.push_back(h.vertex(v));
    doc.edges.push_back(std::move(ne));
  }
  return doc;
}

nlohmann::ordered_json document_json(const HypergraphDocument& doc) {
  nlohmann::ordered_json j;
  if (doc.name) j["name"] = *doc.name;
  j["vertices"] = doc.vertices;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : doc.edges) {
    j["edges"].push_back({{"tails", e.tails}, {"heads", e.heads}});
  }
  return j;
}

std::string serialize_document(const HypergraphDocument& doc) { return document_json(doc).dump(2) + "\n"; }

}  // namespace hyperhom
