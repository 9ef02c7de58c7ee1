#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperhom/error.hpp"

namespace hyperhom {

/// An oriented edge (A, B) given by vertex indices. `tails` are the initial
/// vertices A, `heads` the terminal vertices B. Both sides are sets; the
/// hypergraph stores them sorted.
struct Edge {
  std::vector<std::size_t> tails;
  std::vector<std::size_t> heads;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An edge whose sides are given by vertex names, as read from a document.
struct NamedEdge {
  std::vector<std::string> tails;
  std::vector<std::string> heads;
};

enum class ViolationKind {
  DuplicateVertexName,
  UnknownVertex,
  RepeatedVertexInSide,
  OverlappingSides,  // A ∩ B nonempty
  InversePair,       // edges (A,B) and (B,A) both present
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> edge;        // offending edge index, if any
  std::optional<std::size_t> other_edge;  // for InversePair
  std::string detail;

  [[nodiscard]] std::string message() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  [[nodiscard]] bool has(ViolationKind kind) const;
  [[nodiscard]] std::string summary() const;
};

/// Checks the invariants of an oriented hypergraph given by vertex indices.
ValidationReport validate(std::size_t vertex_count, std::span<const Edge> edges);

/// Same checks on name-based input, plus duplicate and unknown vertex names.
ValidationReport validate(std::span<const std::string> vertices, std::span<const NamedEdge> edges);

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  [[nodiscard]] const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A finite oriented hypergraph. Vertex order fixes the basis of C0 and edge
/// order the basis of C1. Immutable once constructed; construction rejects
/// anything `validate` reports.
class OrientedHypergraph {
 public:
  OrientedHypergraph() = default;

  /// Throws ValidationError.
  OrientedHypergraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  /// Resolves names to indices, then validates. Throws ValidationError.
  static OrientedHypergraph from_names(std::vector<std::string> vertices, std::span<const NamedEdge> edges);

  /// Vertices named "v1", "v2", ...
  static std::vector<std::string> default_vertex_names(std::size_t count);

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(std::size_t j) const { return edges_.at(j); }
  [[nodiscard]] const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
  [[nodiscard]] std::optional<std::size_t> vertex_index(std::string_view name) const;

  /// True when every edge has exactly one tail and one head.
  [[nodiscard]] bool is_graph() const;

  friend bool operator==(const OrientedHypergraph&, const OrientedHypergraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

}  // namespace hyperhom
