#include "hyperhom/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperhom/document.hpp"
#include "hyperhom/fixtures.hpp"
#include "hyperhom/homology.hpp"
#include "hyperhom/random.hpp"
#include "hyperhom/report_json.hpp"
#include "hyperhom/spanning_tree.hpp"

namespace hyperhom::cli {

namespace {

struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ring parse_ring(const std::string& s) { return s == "int" ? Ring::Integer : Ring::Rational; }

std::string structure_text(const ModuleStructure& m, Ring ring = Ring::Integer) {
  if (m.is_zero()) return "0";
  const std::string base = ring == Ring::Integer ? "Z" : "Q";
  std::string s;
  if (m.free_rank > 0) s = m.free_rank == 1 ? base : base + "^" + std::to_string(m.free_rank);
  for (const auto& t : m.torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
  return s;
}

template <class Vec>
std::string vector_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::string chain_text(const Chain& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::string optional_text(const std::optional<IntVector>& v) { return v ? vector_text(*v) : "-"; }

void print_tree(std::ostream& out, const SpanningTree& tree) {
  out << "tree edges:";
  for (auto t : tree.tree_edges) out << ' ' << t;
  out << "\nchords:";
  for (auto e : tree.chords) out << ' ' << e;
  out << "\nfundamental cuts:\n";
  for (const auto& [t, x] : tree.fundamental_cuts) out << "  x_" << t << " = " << chain_text(x) << '\n';
  out << "fundamental cycles:\n";
  for (const auto& [e, x] : tree.fundamental_cycles) out << "  x_" << e << " = " << chain_text(x) << '\n';
}

struct Options {
  bool json = false;
  std::string file;
  std::string homology_ring = "int";
  std::string tree_ring = "rat";
  std::string decompose_ring = "int";
  bool check_integral = false;
  std::size_t limit = 1000000;
  std::string example;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::uint64_t seed = 0;
  std::size_t max_arity = 2;
  bool allow_empty = false;
};

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  HypergraphDocument doc;
  try {
    doc = read_document(read_file(o.file));
  } catch (const ParseError& e) {
    if (o.json) out << ojson{{"ok", false}, {"error", e.what()}}.dump(2) << '\n';
    err << e.what() << '\n';
    return kNegative;
  }
  const ValidationReport report = validate(doc.vertices, doc.edges);
  if (o.json) {
    ojson j = to_json(report);
    j["vertices"] = doc.vertices.size();
    j["edges"] = doc.edges.size();
    out << j.dump(2) << '\n';
  } else if (report.ok()) {
    out << "ok: " << doc.vertices.size() << " vertices, " << doc.edges.size() << " edges\n";
  } else {
    for (const auto& v : report.violations) out << "violation: " << v.message() << '\n';
  }
  return report.ok() ? kSuccess : kNegative;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const OrientedHypergraph h = parse_document(read_file(o.file));
  const HomologyReport r = homology(h, parse_ring(o.homology_ring));
  if (o.json) {
    out << to_json(r).dump(2) << '\n';
    return kSuccess;
  }
  out << "ring: " << to_string(r.ring) << '\n';
  out << "rank Im d1: " << r.rank_image_boundary << '\n';
  out << "H1 = " << structure_text(r.h1, r.ring) << '\n';
  for (const auto& c : r.h1_basis) out << "  basis: " << chain_text(c) << '\n';
  out << "H^1 = " << structure_text(r.h1_cohomology, r.ring) << '\n';
  return kSuccess;
}

int cmd_spanning_tree(const Options& o, std::ostream& out) {
  const OrientedHypergraph h = parse_document(read_file(o.file));
  if (parse_ring(o.tree_ring) == Ring::Rational) {
    const SpanningTree tree = find_spanning_tree_rational(h);
    const TreeAxiomReport axioms = verify_tree_axioms(h, tree);
    std::optional<bool> integral;
    if (o.check_integral) integral = is_integral(h, tree);
    if (o.json) {
      ojson j;
      j["tree"] = to_json(tree);
      j["axioms"] = to_json(axioms);
      j["integral"] = integral ? ojson(*integral) : ojson(nullptr);
      out << j.dump(2) << '\n';
    } else {
      print_tree(out, tree);
      out << "axioms: " << (axioms.ok() ? "ok" : "FAILED") << '\n';
      for (const auto& f : axioms.failures()) out << "  failed: " << f << '\n';
      if (integral) out << "integral: " << (*integral ? "yes" : "no") << '\n';
    }
    if (!axioms.ok()) return kNegative;
    return integral.value_or(true) ? kSuccess : kNegative;
  }

  const TreeSearchResult result = find_spanning_tree_integer(h, o.limit);
  std::optional<TreeAxiomReport> axioms;
  if (result.tree) axioms = verify_tree_axioms(h, *result.tree);
  if (o.json) {
    ojson j = to_json(result);
    j["axioms"] = axioms ? to_json(*axioms) : ojson(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "status: " << to_string(result.status) << " (" << result.candidates_examined
        << " candidates examined)\n";
    if (result.tree) {
      print_tree(out, *result.tree);
      out << "axioms over Z: " << (axioms->ok() ? "ok" : "FAILED") << '\n';
    }
  }
  switch (result.status) {
    case TreeSearchStatus::Found: return kSuccess;
    case TreeSearchStatus::None: return kNegative;
    case TreeSearchStatus::LimitExceeded: return kLimitExceeded;
  }
  return kNegative;
}

int cmd_graphlike(const Options& o, std::ostream& out) {
  const OrientedHypergraph h = parse_document(read_file(o.file));
  const GraphLikenessReport r = graph_likeness(h);
  if (o.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    auto line = [&](const char* label, bool value, const std::optional<IntVector>& witness) {
      out << label << ": " << (value ? "true" : "false");
      if (!value) out << "  witness " << optional_text(witness);
      out << '\n';
    };
    out << "graph-like: " << (r.graph_like() ? "yes" : "no") << '\n';
    line("(i)   H1 canonically isomorphic to H^1", r.canonical_iso, r.annihilator_witness);
    line("(ii)  annihilator of Ker d1 = Im delta0", r.annihilator_equals_image, r.annihilator_witness);
    line("(iii) B = C-perp over Z", r.b_equals_c_perp, r.c_perp_witness);
    line("(iv)  Im d1 direct summand of C0", r.image_direct_summand, r.summand_witness);
    line("(v)   H^1 -> Hom(H1, Z) isomorphism", r.hom_iso, r.torsion_witness);
    out << "H1 = " << structure_text(r.homology.h1) << ", H^1 = " << structure_text(r.homology.h1_cohomology)
        << '\n';
  }
  return r.graph_like() ? kSuccess : kNegative;
}

template <class Decomposition>
void print_decomposition(std::ostream& out, const Decomposition& d) {
  out << "C basis:\n";
  for (const auto& v : d.cycle_basis) out << "  " << vector_text(v) << '\n';
  out << "B basis:\n";
  for (const auto& v : d.cut_basis) out << "  " << vector_text(v) << '\n';
  out << std::boolalpha << "orthogonal: " << d.check.orthogonal << "\ndim C + dim B = |E|: " << d.check.dimensions_add_up
      << "\nC and B intersect in 0: " << d.check.intersection_zero
      << "\nC + B = C1: " << d.check.sum_is_everything << '\n';
  if (d.check.sum_index) out << "index of C + B in C1: " << d.check.sum_index->get_str() << '\n';
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const OrientedHypergraph h = parse_document(read_file(o.file));
  if (parse_ring(o.decompose_ring) == Ring::Rational) {
    const auto d = orthogonal_decomposition_rational(h);
    if (o.json) out << to_json(d).dump(2) << '\n';
    else print_decomposition(out, d);
  } else {
    const auto d = orthogonal_decomposition_integer(h);
    if (o.json) out << to_json(d).dump(2) << '\n';
    else print_decomposition(out, d);
  }
  return kSuccess;
}

int cmd_example(const Options& o, std::ostream& out, std::ostream& err) {
  const auto doc = builtin_example(o.example);
  if (!doc) {
    err << "unknown example \"" << o.example << "\"; available:";
    for (auto n : builtin_example_names()) err << ' ' << n;
    err << '\n';
    return kUsage;
  }
  out << serialize_document(*doc);
  return kSuccess;
}

int cmd_random(const Options& o, std::ostream& out) {
  RandomHypergraphOptions opts;
  opts.vertices = o.vertices;
  opts.edges = o.edges;
  opts.seed = o.seed;
  opts.max_arity = o.max_arity;
  opts.allow_empty_edges = o.allow_empty;
  const OrientedHypergraph h = random_hypergraph(opts);
  const std::string name = "random-n" + std::to_string(o.vertices) + "-m" + std::to_string(o.edges) + "-k" +
                           std::to_string(o.max_arity) + "-s" + std::to_string(o.seed);
  out << serialize_document(to_document(h, name));
  return kSuccess;
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of oriented hypergraphs over the integers and the rationals", "hyperhom"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  auto file_arg = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("FILE", o.file, "Hypergraph document (JSON), or - for stdin")->required();
  };
  const auto ring_check = CLI::IsMember({"int", "rat"});

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a hypergraph document");
  file_arg(validate_cmd);

  auto* homology_cmd = app.add_subcommand("homology", "H1 and H^1 with their module structure");
  file_arg(homology_cmd);
  homology_cmd->add_option("--ring", o.homology_ring, "Coefficient ring")->check(ring_check)->capture_default_str();

  auto* tree_cmd = app.add_subcommand("spanning-tree", "Algebraic spanning tree over the rationals or integers");
  file_arg(tree_cmd);
  tree_cmd->add_option("--ring", o.tree_ring, "Coefficient ring")->check(ring_check)->capture_default_str();
  tree_cmd->add_flag("--check-integral", o.check_integral, "Also decide whether the rational tree is integral");
  tree_cmd->add_option("--limit", o.limit, "Maximum number of candidate trees examined over int")
      ->default_val(o.limit);

  auto* graphlike_cmd = app.add_subcommand("graphlike", "Check the five graph-likeness conditions");
  file_arg(graphlike_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "Cycle and cut modules, their sum and intersection");
  file_arg(decompose_cmd);
  decompose_cmd->add_option("--ring", o.decompose_ring, "Coefficient ring")->check(ring_check)->capture_default_str();

  auto* example_cmd = app.add_subcommand("example", "Print a built-in example document");
  example_cmd->fallthrough();
  example_cmd->add_option("NAME", o.example, "main-example, parallel-edges, triangle-graph or path-graph")
      ->required();

  auto* random_cmd = app.add_subcommand("random", "Print a seeded pseudo-random hypergraph document");
  random_cmd->fallthrough();
  random_cmd->add_option("--vertices", o.vertices, "Number of vertices")->required();
  random_cmd->add_option("--edges", o.edges, "Number of edges")->required();
  random_cmd->add_option("--seed", o.seed, "Seed")->required();
  random_cmd->add_option("--max-arity", o.max_arity, "Largest |A| and |B|")->default_val(o.max_arity);
  random_cmd->add_flag("--allow-empty-edges", o.allow_empty, "Permit edges with no tails and no heads");

  std::vector<std::string> argv_storage{"hyperhom"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out, err);
    if (homology_cmd->parsed()) return cmd_homology(o, out);
    if (tree_cmd->parsed()) return cmd_spanning_tree(o, out);
    if (graphlike_cmd->parsed()) return cmd_graphlike(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (example_cmd->parsed()) return cmd_example(o, out, err);
    if (random_cmd->parsed()) return cmd_random(o, out);
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  }
  return kUsage;
}

}  // namespace hyperhom::cli
