#include "hyperhom/homology.hpp"

#include <algorithm>

#include "hyperhom/boundary.hpp"
#include "hyperhom/error.hpp"

namespace hyperhom {

HomologyReport homology(const OrientedHypergraph& h, Ring ring) {
  const IntMatrix b = boundary_matrix(h);
  const std::size_t m = h.edge_count();
  HomologyReport report;
  report.ring = ring;
  report.rank_image_boundary = image_rank(b);

  if (ring == Ring::Integer) {
    for (const auto& k : integer_kernel_basis(b)) report.h1_basis.push_back(Chain::from_dense(1, ring, k));
    report.h1.free_rank = report.h1_basis.size();
    report.h1_cohomology = quotient_structure(b.transpose());
  } else {
    for (const auto& k : rational_kernel_basis(to_rational(b)))
      report.h1_basis.push_back(Chain::from_dense(1, ring, k));
    report.h1.free_rank = report.h1_basis.size();
    report.h1_cohomology.free_rank = m - report.rank_image_boundary;
  }
  return report;
}

std::vector<IntVector> annihilator_of_cycles(const OrientedHypergraph& h) {
  return annihilator_basis(integer_kernel_basis(boundary_matrix(h)), h.edge_count());
}

namespace {

/// First unit vector accepted by `in_outer` but missing from `inner`; failing
/// that, the first generator of `outer` missing from `inner`.
template <class InOuter>
std::optional<IntVector> difference_witness(std::span<const IntVector> outer, std::span<const IntVector> inner,
                                            std::size_t ambient, InOuter&& in_outer) {
  for (std::size_t i = 0; i < ambient; ++i) {
    IntVector e = unit_vector(ambient, i);
    if (in_outer(e) && !lattice_contains(inner, e, ambient)) return e;
  }
  for (const auto& g : outer)
    if (!lattice_contains(inner, g, ambient)) return g;
  return std::nullopt;
}

bool orthogonal_to_all(const IntVector& y, std::span<const IntVector> family) {
  return std::all_of(family.begin(), family.end(), [&](const IntVector& k) { return sgn(dot(y, k)) == 0; });
}

}  // namespace

bool hom_h1_iso_check(const OrientedHypergraph& h) {
  const IntMatrix b = boundary_matrix(h);
  const ModuleStructure h1_co = quotient_structure(b.transpose());
  const std::size_t h1_rank = integer_kernel_basis(b).size();
  return h1_co.is_free() && h1_co.free_rank == h1_rank;
}

GraphLikenessReport graph_likeness(const OrientedHypergraph& h) {
  const IntMatrix b = boundary_matrix(h);
  const IntMatrix bt = b.transpose();
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  GraphLikenessReport r;

  // (ii): annihilator of the integer cycle lattice against the raw
  // coboundaries δ(φ_v).
  const std::vector<IntVector> cycles = integer_kernel_basis(b);
  const std::vector<IntVector> annihilator = annihilator_basis(cycles, m);
  const std::vector<IntVector> coboundaries = bt.columns();
  r.annihilator_equals_image = sublattice_equal(annihilator, coboundaries, m);
  if (!r.annihilator_equals_image) {
    r.annihilator_witness = difference_witness(annihilator, coboundaries, m,
                                               [&](const IntVector& y) { return orthogonal_to_all(y, cycles); });
  }

  // (i) is the same lattice identity read as a statement about H1 and H¹.
  r.canonical_iso = r.annihilator_equals_image;

  // (iii): C^⊥ from the rational cycle space, B from the Smith form of Bᵀ.
  std::vector<IntVector> rational_cycles;
  for (const auto& k : rational_kernel_basis(to_rational(b))) rational_cycles.push_back(primitive_integer_vector(k));
  const std::vector<IntVector> c_perp = annihilator_basis(rational_cycles, m);
  const std::vector<IntVector> cut_lattice = integer_image_basis(bt);
  r.b_equals_c_perp = sublattice_equal(c_perp, cut_lattice, m);
  if (!r.b_equals_c_perp) {
    r.c_perp_witness = difference_witness(c_perp, cut_lattice, m, [&](const IntVector& y) {
      return orthogonal_to_all(y, rational_cycles);
    });
  }

  // (iv)
  r.image_direct_summand = is_direct_summand(b);
  if (!r.image_direct_summand) r.summand_witness = saturation_witness(b.columns(), n);

  // (v)
  r.hom_iso = hom_h1_iso_check(h);
  if (!r.hom_iso) r.torsion_witness = saturation_witness(coboundaries, m);

  r.homology = homology(h, Ring::Integer);

  if (!r.consistent()) {
    throw InternalInconsistency("graph-likeness conditions disagree: (i)=" + std::to_string(r.canonical_iso) +
                                " (ii)=" + std::to_string(r.annihilator_equals_image) +
                                " (iii)=" + std::to_string(r.b_equals_c_perp) +
                                " (iv)=" + std::to_string(r.image_direct_summand) +
                                " (v)=" + std::to_string(r.hom_iso));
  }
  return r;
}

namespace {

template <class Vec>
DecompositionCheck check_pair(const std::vector<Vec>& c, const std::vector<Vec>& b, std::size_t m) {
  DecompositionCheck check;
  check.orthogonal = true;
  for (const auto& x : c)
    for (const auto& y : b)
      if (sgn(dot(x, y)) != 0) check.orthogonal = false;
  check.dimensions_add_up = c.size() + b.size() == m;
  std::vector<RatVector> combined;
  for (const auto& x : c) combined.push_back(RatVector(x.begin(), x.end()));
  for (const auto& y : b) combined.push_back(RatVector(y.begin(), y.end()));
  const std::size_t r = rational_rank(RatMatrix::from_columns(combined, m));
  check.intersection_zero = r == c.size() + b.size();
  check.sum_is_everything = r == m;
  return check;
}

}  // namespace

RationalDecomposition orthogonal_decomposition_rational(const OrientedHypergraph& h) {
  const RatMatrix b = to_rational(boundary_matrix(h));
  RationalDecomposition out;
  out.cycle_basis = rational_kernel_basis(b);
  out.cut_basis = rational_image_basis(b.transpose());
  out.check = check_pair(out.cycle_basis, out.cut_basis, h.edge_count());
  return out;
}

IntegerDecomposition orthogonal_decomposition_integer(const OrientedHypergraph& h) {
  const IntMatrix b = boundary_matrix(h);
  const std::size_t m = h.edge_count();
  IntegerDecomposition out;
  out.cycle_basis = integer_kernel_basis(b);
  out.cut_basis = integer_image_basis(b.transpose());
  out.check = check_pair(out.cycle_basis, out.cut_basis, m);

  std::vector<IntVector> combined = out.cycle_basis;
  combined.insert(combined.end(), out.cut_basis.begin(), out.cut_basis.end());
  const SnfDecomposition snf = smith_normal_form(IntMatrix::from_columns(combined, m));
  if (snf.rank == m) {
    mpz_class index = 1;
    for (const auto& d : snf.divisors()) index *= d;
    out.check.sum_index = index;
    out.check.sum_is_everything = index == 1;
  } else {
    out.check.sum_is_everything = false;
  }
  return out;
}

PerpCheck check_C_equals_B_perp_integer(const OrientedHypergraph& h) {
  const IntMatrix b = boundary_matrix(h);
  const std::size_t m = h.edge_count();
  const std::vector<IntVector> cut_lattice = integer_image_basis(b.transpose());
  const std::vector<IntVector> b_perp = annihilator_basis(cut_lattice, m);
  const std::vector<IntVector> cycles = integer_kernel_basis(b);
  PerpCheck out;
  out.holds = sublattice_equal(b_perp, cycles, m);
  if (!out.holds) {
    for (const auto& x : b_perp)
      if (!lattice_contains(cycles, x, m)) return PerpCheck{false, x};
    for (const auto& x : cycles)
      if (!lattice_contains(b_perp, x, m)) return PerpCheck{false, x};
  }
  return out;
}

std::vector<IntVector> compute_D(const OrientedHypergraph& h) {
  const IntMatrix b = boundary_matrix(h);
  return integer_image_basis(b.transpose() * b);
}

DStrictness compare_D_with_coboundaries(const OrientedHypergraph& h) {
  const IntMatrix bt = boundary_matrix(h).transpose();
  const std::size_t m = h.edge_count();
  const std::vector<IntVector> d = compute_D(h);
  const std::vector<IntVector> coboundaries = bt.columns();
  DStrictness out;
  out.contained = std::all_of(d.begin(), d.end(),
                              [&](const IntVector& x) { return lattice_contains(coboundaries, x, m); });
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    if (!lattice_contains(d, coboundaries[v], m)) {
      out.proper = true;
      out.vertex = v;
      out.coboundary = coboundaries[v];
      break;
    }
  }
  return out;
}

bool membership_in_U(const OrientedHypergraph& h, const Cochain& candidate) {
  if (candidate.dimension() != 0) throw DimensionError("U lives in degree 0");
  const IntMatrix b = boundary_matrix(h);
  const std::size_t n = h.vertex_count();
  const std::vector<IntVector> constants = integer_kernel_basis(b.transpose());
  const IntMatrix system = b.append_columns(IntMatrix::from_columns(constants, n));
  return solve_integer(system, candidate.to_integer_dense(n)).has_value();
}

bool prop_D_isomorphism_check(const OrientedHypergraph& h, std::span<const Chain> samples) {
  const IntMatrix b = boundary_matrix(h);
  const IntMatrix btb = b.transpose() * b;
  const std::size_t m = h.edge_count();
  const std::size_t kernel_dim = rational_kernel_basis(to_rational(b)).size();
  if (image_rank(btb) != m - kernel_dim) return false;
  const RatMatrix b_q = to_rational(b);
  const RatMatrix btb_q = to_rational(btb);
  for (const Chain& x : samples) {
    const RatVector v = x.to_dense(m);
    if (is_zero_vector(btb_q * v) && !is_zero_vector(b_q * v)) return false;
  }
  return true;
}

}  // namespace hyperhom
