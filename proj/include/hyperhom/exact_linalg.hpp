#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperhom/matrix.hpp"

namespace hyperhom {

// ---------------------------------------------------------------------------
// Smith normal form

/// U·M·V = S with U, V unimodular and S diagonal with d1 | d2 | ... | dk > 0.
/// The inverses of U and V are carried along so that lattice bases can be
/// read off without a second elimination.
struct SnfDecomposition {
  IntMatrix left;           // U, rows×rows
  IntMatrix left_inverse;   // U⁻¹
  IntMatrix diagonal;       // S, rows×cols
  IntMatrix right;          // V, cols×cols
  IntMatrix right_inverse;  // V⁻¹

  /// Number of nonzero diagonal entries.
  std::size_t rank = 0;

  /// d1, ..., d_rank.
  [[nodiscard]] std::vector<mpz_class> divisors() const;
};

/// Pivots on the entry of least absolute value (lowest row, then column, on
/// ties). Diagonal entries are normalized positive.
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
mpz_class determinant(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Elimination over the rationals

struct RowEchelon {
  RatMatrix reduced;                       // reduced row echelon form
  std::vector<std::size_t> pivot_columns;  // one per nonzero row
};

RowEchelon row_echelon(RatMatrix m);

/// Rank over ℚ (Gaussian elimination, independent of the Smith form).
std::size_t image_rank(const IntMatrix& m);
std::size_t rational_rank(const RatMatrix& m);

/// Basis of the nullspace over ℚ: one vector per free column, carrying a 1
/// at that column.
std::vector<RatVector> rational_kernel_basis(const RatMatrix& m);

/// Basis of the column space: the pivot columns of `m`, in order.
std::vector<RatVector> rational_image_basis(const RatMatrix& m);

/// Some x with m·x = b, or nullopt if b is outside the column space.
std::optional<RatVector> solve_rational(const RatMatrix& m, std::span<const mpq_class> b);

/// Scales a rational vector to a primitive integer vector (same ℚ-line).
IntVector primitive_integer_vector(std::span<const mpq_class> v);

// ---------------------------------------------------------------------------
// Integer lattices. Every lattice is given by generators in ℤ^ambient; the
// ambient dimension is always explicit so that empty generator lists are
// unambiguous.

/// Basis of {x ∈ ℤ^cols : m·x = 0}: the last cols−rank columns of V.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& m);

/// Basis of the lattice m·ℤ^cols: d_i times the i-th column of U⁻¹.
std::vector<IntVector> integer_image_basis(const IntMatrix& m);

/// True iff every elementary divisor of m is 1, i.e. its column lattice is a
/// direct summand of ℤ^rows.
bool is_direct_summand(const IntMatrix& m);

/// Some x ∈ ℤ^cols with m·x = b, or nullopt when none exists (also when a
/// rational solution exists but no integral one).
std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const mpz_class> b);

/// Basis of {y ∈ ℤ^ambient : ⟨y,k⟩ = 0 for all k in generators}.
std::vector<IntVector> annihilator_basis(std::span<const IntVector> generators, std::size_t ambient);

/// Isomorphism type of ℤ^rows / (m·ℤ^cols).
struct ModuleStructure {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // entries > 1, each dividing the next

  [[nodiscard]] bool is_free() const { return torsion.empty(); }
  [[nodiscard]] bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const ModuleStructure&, const ModuleStructure&) = default;
};

ModuleStructure quotient_structure(const IntMatrix& m);

/// Lattice membership of `v` in the span of `generators`.
bool lattice_contains(std::span<const IntVector> generators, std::span<const mpz_class> v, std::size_t ambient);

/// True iff the two generator lists span the same lattice.
bool sublattice_equal(std::span<const IntVector> a, std::span<const IntVector> b, std::size_t ambient);

/// True iff the lattice spanned by `generators` is saturated (a direct summand).
bool is_saturated(std::span<const IntVector> generators, std::size_t ambient);

/// A vector in the saturation of the lattice but not in the lattice itself,
/// or nullopt if the lattice is saturated. Unit vectors are tried first in
/// index order; otherwise a column of U⁻¹ with a non-unit divisor is used.
std::optional<IntVector> saturation_witness(std::span<const IntVector> generators, std::size_t ambient);

}  // namespace hyperhom
