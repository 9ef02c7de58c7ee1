#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperhom/chain.hpp"
#include "hyperhom/hypergraph.hpp"
#include "hyperhom/matrix.hpp"

namespace hyperhom {

/// An algebraic spanning tree T ⊆ E together with its fundamental cuts
/// (x_t for t ∈ T, a basis of the cut module with ⟨x_t,t'⟩ = δ_tt') and its
/// fundamental cycles (x_e for chords e ∉ T, a basis of Ker ∂1 with
/// ⟨x_e,e'⟩ = δ_ee').
struct SpanningTree {
  Ring ring = Ring::Rational;
  std::size_t edge_count = 0;
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> chords;
  std::map<std::size_t, Chain> fundamental_cuts;
  std::map<std::size_t, Chain> fundamental_cycles;

  /// Same chains read over another ring; throws RingError if a coefficient
  /// does not fit.
  [[nodiscard]] SpanningTree in_ring(Ring target) const;
};

/// Spanning tree of ℚ^n with respect to a subspace U and the standard basis.
struct VectorSpaceTree {
  std::vector<std::size_t> tree;
  std::vector<std::size_t> chords;
  std::map<std::size_t, RatVector> cuts;    // basis of U^⊥
  std::map<std::size_t, RatVector> cycles;  // basis of U
};

/// Greedy maximal set of columns of `f`, scanned left to right, that is
/// linearly independent over ℚ.
std::vector<std::size_t> greedy_independent_columns(const RatMatrix& f);

/// Fundamental cycles and cuts of `tree` relative to the linear map `f`
/// (whose kernel plays the role of the cycle space). The columns of `f`
/// indexed by `tree` must form a basis of its column space.
VectorSpaceTree tree_for_linear_map(const RatMatrix& f, std::vector<std::size_t> tree);

/// Spanning tree of ℚ^ambient with respect to U = span(u_generators).
VectorSpaceTree vector_space_spanning_tree(std::size_t ambient, std::span<const RatVector> u_generators);

/// Spanning tree over ℚ from a greedy maximal T with ∂T independent (input
/// edge order). Never fails.
SpanningTree find_spanning_tree_rational(const OrientedHypergraph& h);

/// The rational spanning tree determined by `tree`; nullopt unless ∂T is a
/// basis of Im ∂1 over ℚ.
std::optional<SpanningTree> spanning_tree_for_edges(const OrientedHypergraph& h, std::vector<std::size_t> tree);

struct TreeAxiomReport {
  bool edge_partition = false;       // T and the chords partition E, one chain each
  bool cut_kronecker = false;        // ⟨x_t, t'⟩ = δ_tt' on T
  bool cycle_kronecker = false;      // ⟨x_e, e'⟩ = δ_ee' on E∖T
  bool cycles_in_kernel = false;     // ∂x_e = 0
  bool cuts_in_coboundary_image = false;  // γ(x_t) = δ0 φ for some φ over the tree's ring
  bool cuts_form_basis = false;      // of γ⁻¹(Im δ0) over the tree's ring
  bool cycles_form_basis = false;    // of Ker ∂1 over the tree's ring

  [[nodiscard]] bool ok() const {
    return edge_partition && cut_kronecker && cycle_kronecker && cycles_in_kernel && cuts_in_coboundary_image &&
           cuts_form_basis && cycles_form_basis;
  }
  [[nodiscard]] std::vector<std::string> failures() const;
};

/// Re-checks both spanning tree axioms from scratch.
TreeAxiomReport verify_tree_axioms(const OrientedHypergraph& h, const SpanningTree& tree);

/// True iff every fundamental cycle is integral and every γ(x_t) is δ0 of an
/// integer 0-cochain.
bool is_integral(const OrientedHypergraph& h, const SpanningTree& tree);

enum class TreeSearchStatus { Found, None, LimitExceeded };

std::string_view to_string(TreeSearchStatus status);

struct TreeSearchResult {
  TreeSearchStatus status = TreeSearchStatus::None;
  std::optional<SpanningTree> tree;  // over ℤ, set iff status == Found
  std::size_t candidates_examined = 0;
};

/// Exhaustive search for a spanning tree over ℤ. Candidates are the subsets
/// T with ∂T a ℚ-basis of Im ∂1, in lexicographic order of edge indices; the
/// first integral one wins. At most `search_limit` candidates are examined.
TreeSearchResult find_spanning_tree_integer(const OrientedHypergraph& h, std::size_t search_limit);

/// Calls `visit` with every subset of columns of `f` of size rank(f) that is
/// a basis of the column space, in lexicographic order. Stops early when
/// `visit` returns false.
template <class Visit>
void for_each_column_basis(const RatMatrix& f, Visit&& visit);

}  // namespace hyperhom

#include "hyperhom/detail/column_bases.hpp"
