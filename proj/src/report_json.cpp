#include "hyperhom/report_json.hpp"

namespace hyperhom {

ojson vector_json(const IntVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(exact_string(x));
  return a;
}

ojson vector_json(const RatVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(exact_string(x));
  return a;
}

namespace {

template <class Vec>
ojson basis_json(const std::vector<Vec>& basis) {
  ojson a = ojson::array();
  for (const auto& v : basis) a.push_back(vector_json(v));
  return a;
}

ojson optional_vector(const std::optional<IntVector>& v) { return v ? vector_json(*v) : ojson(nullptr); }

}  // namespace

ojson to_json(const ValidationReport& report) {
  ojson j;
  j["ok"] = report.ok();
  j["violations"] = ojson::array();
  for (const auto& v : report.violations) {
    ojson item;
    item["kind"] = std::string(to_string(v.kind));
    item["edge"] = v.edge ? ojson(*v.edge) : ojson(nullptr);
    item["other_edge"] = v.other_edge ? ojson(*v.other_edge) : ojson(nullptr);
    item["message"] = v.message();
    j["violations"].push_back(std::move(item));
  }
  return j;
}

ojson to_json(const ModuleStructure& m) {
  ojson j;
  j["free_rank"] = m.free_rank;
  j["torsion"] = vector_json(m.torsion);
  return j;
}

ojson to_json(const Chain& c) {
  ojson terms = ojson::object();
  for (const auto& [i, v] : c.terms()) terms[std::to_string(i)] = exact_string(v);
  return terms;
}

ojson to_json(const HomologyReport& report) {
  ojson j;
  j["ring"] = std::string(to_string(report.ring));
  j["h1"] = to_json(report.h1);
  j["h1_basis"] = ojson::array();
  for (const auto& c : report.h1_basis) j["h1_basis"].push_back(to_json(c));
  j["h1_cohomology"] = to_json(report.h1_cohomology);
  j["rank_image_boundary"] = report.rank_image_boundary;
  return j;
}

ojson to_json(const GraphLikenessReport& report) {
  ojson j;
  j["graph_like"] = report.graph_like();
  ojson c;
  c["canonical_iso"] = report.canonical_iso;
  c["annihilator_equals_image"] = report.annihilator_equals_image;
  c["b_equals_c_perp"] = report.b_equals_c_perp;
  c["image_direct_summand"] = report.image_direct_summand;
  c["hom_iso"] = report.hom_iso;
  j["conditions"] = std::move(c);
  j["canonical_iso_evaluated_as"] = "annihilator_equals_image";
  ojson w;
  w["annihilator_equals_image"] = optional_vector(report.annihilator_witness);
  w["canonical_iso"] = optional_vector(report.annihilator_witness);
  w["b_equals_c_perp"] = optional_vector(report.c_perp_witness);
  w["image_direct_summand"] = optional_vector(report.summand_witness);
  w["hom_iso"] = optional_vector(report.torsion_witness);
  j["witnesses"] = std::move(w);
  j["homology"] = to_json(report.homology);
  return j;
}

ojson to_json(const SpanningTree& tree) {
  ojson j;
  j["ring"] = std::string(to_string(tree.ring));
  j["tree_edges"] = tree.tree_edges;
  j["chords"] = tree.chords;
  ojson cuts = ojson::object();
  for (const auto& [t, x] : tree.fundamental_cuts) cuts[std::to_string(t)] = to_json(x);
  ojson cycles = ojson::object();
  for (const auto& [e, x] : tree.fundamental_cycles) cycles[std::to_string(e)] = to_json(x);
  j["fundamental_cuts"] = std::move(cuts);
  j["fundamental_cycles"] = std::move(cycles);
  return j;
}

ojson to_json(const TreeAxiomReport& report) {
  ojson j;
  j["ok"] = report.ok();
  j["edge_partition"] = report.edge_partition;
  j["cut_kronecker"] = report.cut_kronecker;
  j["cycle_kronecker"] = report.cycle_kronecker;
  j["cycles_in_kernel"] = report.cycles_in_kernel;
  j["cuts_in_coboundary_image"] = report.cuts_in_coboundary_image;
  j["cuts_form_basis"] = report.cuts_form_basis;
  j["cycles_form_basis"] = report.cycles_form_basis;
  return j;
}

ojson to_json(const TreeSearchResult& result) {
  ojson j;
  j["status"] = std::string(to_string(result.status));
  j["candidates_examined"] = result.candidates_examined;
  j["tree"] = result.tree ? to_json(*result.tree) : ojson(nullptr);
  return j;
}

ojson to_json(const DecompositionCheck& check) {
  ojson j;
  j["orthogonal"] = check.orthogonal;
  j["dimensions_add_up"] = check.dimensions_add_up;
  j["intersection_zero"] = check.intersection_zero;
  j["sum_is_everything"] = check.sum_is_everything;
  j["sum_index"] = check.sum_index ? ojson(exact_string(*check.sum_index)) : ojson(nullptr);
  return j;
}

ojson to_json(const RationalDecomposition& d) {
  ojson j;
  j["ring"] = "rat";
  j["cycle_basis"] = basis_json(d.cycle_basis);
  j["cut_basis"] = basis_json(d.cut_basis);
  j["check"] = to_json(d.check);
  return j;
}

ojson to_json(const IntegerDecomposition& d) {
  ojson j;
  j["ring"] = "int";
  j["cycle_basis"] = basis_json(d.cycle_basis);
  j["cut_basis"] = basis_json(d.cut_basis);
  j["check"] = to_json(d.check);
  return j;
}

}  // namespace hyperhom
