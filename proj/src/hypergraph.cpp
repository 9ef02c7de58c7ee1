#include "hyperhom/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hyperhom {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateVertexName: return "duplicate vertex name";
    case ViolationKind::UnknownVertex: return "unknown vertex";
    case ViolationKind::RepeatedVertexInSide: return "vertex repeated within one side of an edge";
    case ViolationKind::OverlappingSides: return "A∩B nonempty";
    case ViolationKind::InversePair: return "inverse pair";
  }
  return "?";
}

std::string Violation::message() const {
  std::ostringstream os;
  os << to_string(kind);
  if (edge) os << " at edge " << *edge;
  if (other_edge) os << " and edge " << *other_edge;
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) os << (i ? "; " : "") << violations[i].message();
  return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : Error("invalid hypergraph: " + report.summary()), report_(std::move(report)) {}

namespace {

using Side = std::vector<std::size_t>;

Side sorted_side(Side s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

ValidationReport validate(std::size_t vertex_count, std::span<const Edge> edges) {
  ValidationReport report;
  std::vector<std::pair<Side, Side>> normalized;
  std::vector<bool> well_formed_edge;
  normalized.reserve(edges.size());

  for (std::size_t j = 0; j < edges.size(); ++j) {
    Side tails = sorted_side(edges[j].tails);
    Side heads = sorted_side(edges[j].heads);
    bool well_formed = true;
    for (const Side* side : {&tails, &heads}) {
      for (std::size_t v : *side) {
        if (v >= vertex_count) {
          report.violations.push_back({ViolationKind::UnknownVertex, j, std::nullopt,
                                       "index " + std::to_string(v)});
          well_formed = false;
        }
      }
      if (std::adjacent_find(side->begin(), side->end()) != side->end()) {
        report.violations.push_back({ViolationKind::RepeatedVertexInSide, j, std::nullopt, ""});
        well_formed = false;
      }
    }
    Side common;
    std::set_intersection(tails.begin(), tails.end(), heads.begin(), heads.end(), std::back_inserter(common));
    if (!common.empty()) {
      report.violations.push_back({ViolationKind::OverlappingSides, j, std::nullopt,
                                   "vertex index " + std::to_string(common.front())});
      well_formed = false;
    }
    normalized.emplace_back(std::move(tails), std::move(heads));
    well_formed_edge.push_back(well_formed);
  }

  // An edge (A,B) with A != B may not coexist with (B,A). Identical pairs at
  // different indices are parallel edges and are fine; so are repeated (∅,∅).
  std::map<std::pair<Side, Side>, std::size_t> first_index;
  for (std::size_t j = 0; j < normalized.size(); ++j) {
    if (!well_formed_edge[j]) continue;
    const auto& [a, b] = normalized[j];
    if (a != b) {
      if (auto it = first_index.find({b, a}); it != first_index.end()) {
        report.violations.push_back({ViolationKind::InversePair, it->second, j, ""});
      }
    }
    first_index.try_emplace(normalized[j], j);
  }
  return report;
}

ValidationReport validate(std::span<const std::string> vertices, std::span<const NamedEdge> edges) {
  ValidationReport report;
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], i).second) {
      report.violations.push_back({ViolationKind::DuplicateVertexName, std::nullopt, std::nullopt,
                                   "\"" + vertices[i] + "\""});
    }
  }

  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  bool names_ok = true;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    Edge e;
    auto resolve = [&](const std::vector<std::string>& names, std::vector<std::size_t>& out) {
      for (const auto& name : names) {
        auto it = index.find(name);
        if (it == index.end()) {
          report.violations.push_back({ViolationKind::UnknownVertex, j, std::nullopt, "\"" + name + "\""});
          names_ok = false;
        } else {
          out.push_back(it->second);
        }
      }
    };
    resolve(edges[j].tails, e.tails);
    resolve(edges[j].heads, e.heads);
    resolved.push_back(std::move(e));
  }
  if (names_ok) {
    auto structural = validate(vertices.size(), resolved);
    report.violations.insert(report.violations.end(), structural.violations.begin(),
                             structural.violations.end());
  }
  return report;
}

OrientedHypergraph::OrientedHypergraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  ValidationReport report = validate(vertices_.size(), edges_);
  std::set<std::string_view> seen;
  for (const auto& name : vertices_) {
    if (!seen.insert(name).second) {
      report.violations.push_back({ViolationKind::DuplicateVertexName, std::nullopt, std::nullopt,
                                   "\"" + name + "\""});
    }
  }
  if (!report.ok()) throw ValidationError(std::move(report));
  for (auto& e : edges_) {
    e.tails = sorted_side(std::move(e.tails));
    e.heads = sorted_side(std::move(e.heads));
  }
}

OrientedHypergraph OrientedHypergraph::from_names(std::vector<std::string> vertices,
                                                  std::span<const NamedEdge> edges) {
  ValidationReport report = validate(vertices, edges);
  if (!report.ok()) throw ValidationError(std::move(report));
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& ne : edges) {
    Edge e;
    for (const auto& n : ne.tails) e.tails.push_back(index.at(n));
    for (const auto& n : ne.heads) e.heads.push_back(index.at(n));
    resolved.push_back(std::move(e));
  }
  return OrientedHypergraph(std::move(vertices), std::move(resolved));
}

std::vector<std::string> OrientedHypergraph::default_vertex_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

std::optional<std::size_t> OrientedHypergraph::vertex_index(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool OrientedHypergraph::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.tails.size() == 1 && e.heads.size() == 1; });
}

}  // namespace hyperhom
