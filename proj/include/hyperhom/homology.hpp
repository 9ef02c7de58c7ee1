#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperhom/chain.hpp"
#include "hyperhom/exact_linalg.hpp"
#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

/// H1 = Ker ∂1 and H¹ = C¹ / Im δ0.
struct HomologyReport {
  Ring ring = Ring::Integer;
  ModuleStructure h1;
  std::vector<Chain> h1_basis;  // basis of Ker ∂1 over `ring`
  ModuleStructure h1_cohomology;
  std::size_t rank_image_boundary = 0;  // d = rank Im ∂1
};

HomologyReport homology(const OrientedHypergraph& h, Ring ring);

/// Basis of the annihilator of Ker ∂1 in C¹ (cochain coefficient vectors).
std::vector<IntVector> annihilator_of_cycles(const OrientedHypergraph& h);

/// The five conditions for H1 and H¹ to behave as they do for graphs. Each
/// is computed by its own route; they must agree.
struct GraphLikenessReport {
  /// (i) H1 and H¹ canonically isomorphic. Evaluated as the identification
  /// Ker i* = Im δ0, which is condition (ii).
  bool canonical_iso = false;
  /// (ii) the annihilator of Ker ∂1 in C¹ equals Im δ0.
  bool annihilator_equals_image = false;
  /// (iii) B = C^⊥ over ℤ, with B = γ⁻¹(Im δ0) and C = Ker ∂1.
  bool b_equals_c_perp = false;
  /// (iv) Im ∂1 is a direct summand of C0.
  bool image_direct_summand = false;
  /// (v) [ψ] ↦ ψ↾Ker ∂1 is an isomorphism H¹ → Hom(H1, ℤ).
  bool hom_iso = false;

  std::optional<IntVector> annihilator_witness;  // cochain in the annihilator, outside Im δ0
  std::optional<IntVector> c_perp_witness;       // chain in C^⊥, outside B
  std::optional<IntVector> summand_witness;      // 0-chain y ∉ Im ∂1 with n·y ∈ Im ∂1
  std::optional<IntVector> torsion_witness;      // cochain whose class in H¹ is nonzero torsion

  HomologyReport homology;

  [[nodiscard]] bool graph_like() const { return annihilator_equals_image; }
  [[nodiscard]] bool consistent() const {
    return canonical_iso == annihilator_equals_image && annihilator_equals_image == b_equals_c_perp &&
           b_equals_c_perp == image_direct_summand && image_direct_summand == hom_iso;
  }
};

/// Throws InternalInconsistency if the five values disagree.
GraphLikenessReport graph_likeness(const OrientedHypergraph& h);

/// H¹ torsion-free with free rank equal to rank H1, from Smith form data.
bool hom_h1_iso_check(const OrientedHypergraph& h);

struct DecompositionCheck {
  bool orthogonal = false;         // every cycle pairs to 0 with every cut chain
  bool dimensions_add_up = false;  // rank C + rank B = |E|
  bool intersection_zero = false;  // C ∩ B = 0
  bool sum_is_everything = false;  // C + B = C1
  /// Index of C + B in C1 when the sum has full rank (1 iff it is all of C1).
  std::optional<mpz_class> sum_index;
};

struct RationalDecomposition {
  std::vector<RatVector> cycle_basis;  // C = Ker ∂1
  std::vector<RatVector> cut_basis;    // B = γ⁻¹(Im δ0)
  DecompositionCheck check;
};

struct IntegerDecomposition {
  std::vector<IntVector> cycle_basis;
  std::vector<IntVector> cut_basis;
  DecompositionCheck check;
};

/// C1 = C ⊕ B with C ⟂ B over ℚ.
RationalDecomposition orthogonal_decomposition_rational(const OrientedHypergraph& h);

/// The same pair of lattices over ℤ, where C + B can be a proper sublattice.
IntegerDecomposition orthogonal_decomposition_integer(const OrientedHypergraph& h);

struct PerpCheck {
  bool holds = false;
  std::optional<IntVector> witness;  // chain in one lattice but not the other
};

/// C = B^⊥ over ℤ. Holds for every hypergraph; `false` means a bug.
PerpCheck check_C_equals_B_perp_integer(const OrientedHypergraph& h);

/// Basis of D = Im(δ∘γ∘∂1) ⊆ C¹, the lattice spanned by the columns of BᵀB.
std::vector<IntVector> compute_D(const OrientedHypergraph& h);

struct DStrictness {
  bool contained = false;  // D ⊆ Im δ0
  bool proper = false;     // D ≠ Im δ0
  std::optional<std::size_t> vertex;      // φ_v with δ(φ_v) ∉ D
  std::optional<IntVector> coboundary;    // δ(φ_v)
};

DStrictness compare_D_with_coboundaries(const OrientedHypergraph& h);

/// Whether φ represents an element of U = (π∘γ∘∂)(C1) ⊆ C⁰/Ker δ0, i.e.
/// φ = γ(∂x) + κ for some integer chain x and κ ∈ Ker δ0.
bool membership_in_U(const OrientedHypergraph& h, const Cochain& candidate);

/// rank D = |E| − rank Ker ∂1, and δγ∂x = 0 ⇒ ∂x = 0 on every sample.
bool prop_D_isomorphism_check(const OrientedHypergraph& h, std::span<const Chain> samples);

}  // namespace hyperhom
