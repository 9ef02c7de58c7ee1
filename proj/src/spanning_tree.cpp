#include "hyperhom/spanning_tree.hpp"

#include <algorithm>
#include <numeric>

#include "hyperhom/boundary.hpp"
#include "hyperhom/error.hpp"
#include "hyperhom/exact_linalg.hpp"

namespace hyperhom {

SpanningTree SpanningTree::in_ring(Ring target) const {
  SpanningTree out = *this;
  out.ring = target;
  for (auto& [t, x] : out.fundamental_cuts) x = x.in_ring(target);
  for (auto& [e, x] : out.fundamental_cycles) x = x.in_ring(target);
  return out;
}

std::vector<std::size_t> greedy_independent_columns(const RatMatrix& f) {
  std::vector<std::size_t> chosen;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    chosen.push_back(j);
    const std::size_t r = rational_rank(f.select_columns(chosen));
    if (r == rank) {
      chosen.pop_back();
    } else {
      rank = r;
    }
  }
  return chosen;
}

VectorSpaceTree tree_for_linear_map(const RatMatrix& f, std::vector<std::size_t> tree) {
  std::sort(tree.begin(), tree.end());
  const std::size_t n = f.cols();
  const RatMatrix f_tree = f.select_columns(tree);
  if (rational_rank(f_tree) != tree.size() || tree.size() != rational_rank(f)) {
    throw Error("tree columns are not a basis of the column space");
  }

  VectorSpaceTree out;
  out.tree = tree;
  std::vector<bool> in_tree(n, false);
  for (std::size_t t : tree) in_tree[t] = true;
  for (std::size_t e = 0; e < n; ++e)
    if (!in_tree[e]) out.chords.push_back(e);

  // x_e = e − x'_e, where x'_e is the unique combination of tree columns
  // with the same image as e.
  std::map<std::size_t, RatVector> lambda;
  for (std::size_t e : out.chords) {
    auto coeffs = solve_rational(f_tree, f.column(e));
    if (!coeffs) throw InternalInconsistency("chord image outside the span of the tree");
    RatVector x(n, mpq_class(0));
    x[e] = 1;
    for (std::size_t k = 0; k < tree.size(); ++k) x[tree[k]] = -(*coeffs)[k];
    out.cycles.emplace(e, std::move(x));
    lambda.emplace(e, std::move(*coeffs));
  }

  // γ(x_t)(t') = δ_tt' on the tree and γ(x_t)(e) = −γ(x_e)(t) on chords.
  for (std::size_t k = 0; k < tree.size(); ++k) {
    RatVector x(n, mpq_class(0));
    x[tree[k]] = 1;
    for (std::size_t e : out.chords) x[e] = -out.cycles.at(e)[tree[k]];
    out.cuts.emplace(tree[k], std::move(x));
  }
  return out;
}

VectorSpaceTree vector_space_spanning_tree(std::size_t ambient, std::span<const RatVector> u_generators) {
  // The projection ℚ^n → ℚ^n/U is represented by a matrix with kernel U:
  // its rows form a basis of U^⊥.
  const RatMatrix u_rows = RatMatrix::from_rows(u_generators, ambient);
  const std::vector<RatVector> perp = rational_kernel_basis(u_rows);
  const RatMatrix projection = RatMatrix::from_rows(perp, ambient);
  return tree_for_linear_map(projection, greedy_independent_columns(projection));
}

namespace {

SpanningTree to_hypergraph_tree(const VectorSpaceTree& vs, std::size_t edge_count) {
  SpanningTree out;
  out.ring = Ring::Rational;
  out.edge_count = edge_count;
  out.tree_edges = vs.tree;
  out.chords = vs.chords;
  for (const auto& [t, x] : vs.cuts) out.fundamental_cuts.emplace(t, Chain::from_dense(1, Ring::Rational, x));
  for (const auto& [e, x] : vs.cycles) out.fundamental_cycles.emplace(e, Chain::from_dense(1, Ring::Rational, x));
  return out;
}

}  // namespace

SpanningTree find_spanning_tree_rational(const OrientedHypergraph& h) {
  const RatMatrix b = to_rational(boundary_matrix(h));
  return to_hypergraph_tree(tree_for_linear_map(b, greedy_independent_columns(b)), h.edge_count());
}

std::optional<SpanningTree> spanning_tree_for_edges(const OrientedHypergraph& h, std::vector<std::size_t> tree) {
  const RatMatrix b = to_rational(boundary_matrix(h));
  std::sort(tree.begin(), tree.end());
  if (std::adjacent_find(tree.begin(), tree.end()) != tree.end()) return std::nullopt;
  if (!tree.empty() && tree.back() >= h.edge_count()) throw IndexError("tree edge index out of range");
  const std::size_t r = rational_rank(b);
  if (tree.size() != r || rational_rank(b.select_columns(tree)) != r) return std::nullopt;
  return to_hypergraph_tree(tree_for_linear_map(b, std::move(tree)), h.edge_count());
}

std::vector<std::string> TreeAxiomReport::failures() const {
  std::vector<std::string> out;
  if (!edge_partition) out.emplace_back("edge_partition");
  if (!cut_kronecker) out.emplace_back("cut_kronecker");
  if (!cycle_kronecker) out.emplace_back("cycle_kronecker");
  if (!cycles_in_kernel) out.emplace_back("cycles_in_kernel");
  if (!cuts_in_coboundary_image) out.emplace_back("cuts_in_coboundary_image");
  if (!cuts_form_basis) out.emplace_back("cuts_form_basis");
  if (!cycles_form_basis) out.emplace_back("cycles_form_basis");
  return out;
}

namespace {

bool partition_ok(const SpanningTree& tree, std::size_t m) {
  if (tree.edge_count != m) return false;
  std::vector<int> seen(m, 0);
  for (std::size_t t : tree.tree_edges) {
    if (t >= m || seen[t]++) return false;
    if (!tree.fundamental_cuts.contains(t)) return false;
  }
  for (std::size_t e : tree.chords) {
    if (e >= m || seen[e]++) return false;
    if (!tree.fundamental_cycles.contains(e)) return false;
  }
  if (tree.fundamental_cuts.size() != tree.tree_edges.size()) return false;
  if (tree.fundamental_cycles.size() != tree.chords.size()) return false;
  if (!std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; })) return false;
  auto chain_ok = [&](const Chain& x) {
    return x.dimension() == 1 && x.ring() == tree.ring && x.support_bound() <= m;
  };
  return std::all_of(tree.fundamental_cuts.begin(), tree.fundamental_cuts.end(),
                     [&](const auto& kv) { return chain_ok(kv.second); }) &&
         std::all_of(tree.fundamental_cycles.begin(), tree.fundamental_cycles.end(),
                     [&](const auto& kv) { return chain_ok(kv.second); });
}

bool kronecker(const std::map<std::size_t, Chain>& family, std::span<const std::size_t> index) {
  for (std::size_t a : index)
    for (std::size_t b : index) {
      const mpq_class expected = a == b ? 1 : 0;
      if (family.at(a).coefficient(b).value() != expected) return false;
    }
  return true;
}

bool all_integral(const std::map<std::size_t, Chain>& family) {
  for (const auto& [k, x] : family)
    for (const auto& [i, c] : x.terms())
      if (c.get_den() != 1) return false;
  return true;
}

std::vector<RatVector> dense_family(const std::map<std::size_t, Chain>& family, std::size_t m) {
  std::vector<RatVector> out;
  for (const auto& [k, x] : family) out.push_back(x.to_dense(m));
  return out;
}

std::vector<IntVector> integer_family(const std::map<std::size_t, Chain>& family, std::size_t m) {
  std::vector<IntVector> out;
  for (const auto& [k, x] : family) out.push_back(x.to_integer_dense(m));
  return out;
}

}  // namespace

TreeAxiomReport verify_tree_axioms(const OrientedHypergraph& h, const SpanningTree& tree) {
  TreeAxiomReport report;
  const std::size_t m = h.edge_count();
  report.edge_partition = partition_ok(tree, m);
  if (!report.edge_partition) return report;

  report.cut_kronecker = kronecker(tree.fundamental_cuts, tree.tree_edges);
  report.cycle_kronecker = kronecker(tree.fundamental_cycles, tree.chords);
  report.cycles_in_kernel = std::all_of(tree.fundamental_cycles.begin(), tree.fundamental_cycles.end(),
                                        [&](const auto& kv) { return boundary(h, kv.second).is_zero(); });

  const IntMatrix b = boundary_matrix(h);
  const IntMatrix bt = b.transpose();
  const std::size_t d = image_rank(b);
  const auto cuts = dense_family(tree.fundamental_cuts, m);
  const auto cycles = dense_family(tree.fundamental_cycles, m);
  const bool cuts_independent = rational_rank(RatMatrix::from_columns(cuts, m)) == cuts.size();
  const bool cycles_independent = rational_rank(RatMatrix::from_columns(cycles, m)) == cycles.size();

  if (tree.ring == Ring::Rational) {
    const RatMatrix bt_q = to_rational(bt);
    report.cuts_in_coboundary_image =
        std::all_of(cuts.begin(), cuts.end(), [&](const RatVector& x) { return solve_rational(bt_q, x).has_value(); });
    report.cuts_form_basis = report.cuts_in_coboundary_image && cuts_independent && cuts.size() == d;
    report.cycles_form_basis = report.cycles_in_kernel && cycles_independent && cycles.size() == m - d;
    return report;
  }

  // Over ℤ the families must generate the lattices, not just their spans.
  const bool cuts_integral = all_integral(tree.fundamental_cuts);
  const bool cycles_integral = all_integral(tree.fundamental_cycles);
  if (cuts_integral) {
    const auto int_cuts = integer_family(tree.fundamental_cuts, m);
    report.cuts_in_coboundary_image = std::all_of(int_cuts.begin(), int_cuts.end(), [&](const IntVector& x) {
      return solve_integer(bt, x).has_value();
    });
    report.cuts_form_basis = report.cuts_in_coboundary_image && cuts_independent &&
                             sublattice_equal(int_cuts, bt.columns(), m);
  }
  if (cycles_integral) {
    const auto int_cycles = integer_family(tree.fundamental_cycles, m);
    report.cycles_form_basis = report.cycles_in_kernel && cycles_independent &&
                               sublattice_equal(int_cycles, integer_kernel_basis(b), m);
  }
  return report;
}

bool is_integral(const OrientedHypergraph& h, const SpanningTree& tree) {
  const std::size_t m = h.edge_count();
  if (!all_integral(tree.fundamental_cycles) || !all_integral(tree.fundamental_cuts)) return false;
  const IntMatrix bt = boundary_matrix(h).transpose();
  for (const auto& [t, x] : tree.fundamental_cuts)
    if (!solve_integer(bt, x.to_integer_dense(m))) return false;
  return true;
}

std::string_view to_string(TreeSearchStatus status) {
  switch (status) {
    case TreeSearchStatus::Found: return "found";
    case TreeSearchStatus::None: return "none";
    case TreeSearchStatus::LimitExceeded: return "limit-exceeded";
  }
  return "?";
}

TreeSearchResult find_spanning_tree_integer(const OrientedHypergraph& h, std::size_t search_limit) {
  const RatMatrix b = to_rational(boundary_matrix(h));
  TreeSearchResult result;
  for_each_column_basis(b, [&](const std::vector<std::size_t>& subset) {
    if (result.candidates_examined == search_limit) {
      result.status = TreeSearchStatus::LimitExceeded;
      return false;
    }
    ++result.candidates_examined;
    SpanningTree candidate = to_hypergraph_tree(tree_for_linear_map(b, subset), h.edge_count());
    if (is_integral(h, candidate)) {
      result.status = TreeSearchStatus::Found;
      result.tree = candidate.in_ring(Ring::Integer);
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace hyperhom
