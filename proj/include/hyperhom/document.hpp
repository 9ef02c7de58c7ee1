#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperhom/error.hpp"
#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

/// On-disk form of a hypergraph:
///
///   {"name": "...", "vertices": ["a", "b"],
///    "edges": [{"tails": ["a"], "heads": ["b"]}]}
///
/// `tails` are the initial vertices A of an edge, `heads` the terminal
/// vertices B, so ∂(edge) = Σ heads − Σ tails. "name" is optional.
struct HypergraphDocument {
  std::optional<std::string> name;
  std::vector<std::string> vertices;
  std::vector<NamedEdge> edges;
};

/// Malformed JSON or a document that does not follow the schema.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::optional<std::size_t> byte_position = std::nullopt)
      : Error(what), byte_position_(byte_position) {}
  [[nodiscard]] std::optional<std::size_t> byte_position() const { return byte_position_; }

 private:
  std::optional<std::size_t> byte_position_;
};

/// Throws ParseError.
HypergraphDocument read_document(std::string_view text);

/// Throws ValidationError.
OrientedHypergraph to_hypergraph(const HypergraphDocument& doc);

/// read_document followed by to_hypergraph.
OrientedHypergraph parse_document(std::string_view text);

HypergraphDocument to_document(const OrientedHypergraph& h, std::optional<std::string> name = std::nullopt);

nlohmann::ordered_json document_json(const HypergraphDocument& doc);

/// Pretty-printed JSON text with a trailing newline.
std::string serialize_document(const HypergraphDocument& doc);

}  // namespace hyperhom
