#include "hyperhom/exact_linalg.hpp"

#include <algorithm>

#include "hyperhom/error.hpp"

namespace hyperhom {

IntVector to_integer(std::span<const mpq_class> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw RingError("vector entry " + x.get_str() + " is not an integer");
    out.push_back(x.get_num());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<mpz_class> SnfDecomposition::divisors() const {
  std::vector<mpz_class> d;
  d.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) d.push_back(diagonal(i, i));
  return d;
}

namespace {

/// Working state of the reduction. Every elementary operation is applied to
/// S and mirrored on U, U⁻¹ (row side) or V, V⁻¹ (column side).
class SnfReducer {
 public:
  explicit SnfReducer(const IntMatrix& m)
      : s_(m),
        u_(IntMatrix::identity(m.rows())),
        u_inv_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())),
        v_inv_(IntMatrix::identity(m.cols())) {}

  SnfDecomposition run() {
    const std::size_t limit = std::min(s_.rows(), s_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!move_min_pivot(t)) break;
      while (true) {
        if (!eliminate_cross(t)) {
          move_min_pivot(t);
          continue;
        }
        if (auto bad_row = find_indivisible_row(t)) {
          add_row(t, *bad_row, mpz_class(1));
          continue;
        }
        break;
      }
      if (sgn(s_(t, t)) < 0) negate_row(t);
    }
    return SnfDecomposition{std::move(u_), std::move(u_inv_), std::move(s_), std::move(v_), std::move(v_inv_), t};
  }

 private:
  // row[target] += k*row[source]; U⁻¹ gets col[source] -= k*col[target].
  void add_row(std::size_t target, std::size_t source, const mpz_class& k) {
    s_.add_row_multiple(target, source, k);
    u_.add_row_multiple(target, source, k);
    u_inv_.add_col_multiple(source, target, mpz_class(-k));
  }
  // col[target] += k*col[source]; V⁻¹ gets row[source] -= k*row[target].
  void add_col(std::size_t target, std::size_t source, const mpz_class& k) {
    s_.add_col_multiple(target, source, k);
    v_.add_col_multiple(target, source, k);
    v_inv_.add_row_multiple(source, target, mpz_class(-k));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    s_.swap_rows(a, b);
    u_.swap_rows(a, b);
    u_inv_.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    s_.swap_cols(a, b);
    v_.swap_cols(a, b);
    v_inv_.swap_rows(a, b);
  }
  void negate_row(std::size_t i) {
    s_.negate_row(i);
    u_.negate_row(i);
    u_inv_.negate_col(i);
  }

  /// Moves the nonzero entry of least absolute value in the trailing block
  /// to (t,t). Returns false if the block is zero.
  bool move_min_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs;
    for (std::size_t i = t; i < s_.rows(); ++i) {
      for (std::size_t j = t; j < s_.cols(); ++j) {
        if (sgn(s_(i, j)) == 0) continue;
        mpz_class a = abs(s_(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  /// Reduces row t and column t modulo the pivot. Returns true if both are
  /// cleared apart from the pivot.
  bool eliminate_cross(std::size_t t) {
    bool cleared = true;
    const mpz_class pivot = s_(t, t);
    for (std::size_t i = t + 1; i < s_.rows(); ++i) {
      if (sgn(s_(i, t)) == 0) continue;
      mpz_class q = s_(i, t) / pivot;
      if (sgn(q) != 0) add_row(i, t, mpz_class(-q));
      if (sgn(s_(i, t)) != 0) cleared = false;
    }
    for (std::size_t j = t + 1; j < s_.cols(); ++j) {
      if (sgn(s_(t, j)) == 0) continue;
      mpz_class q = s_(t, j) / pivot;
      if (sgn(q) != 0) add_col(j, t, mpz_class(-q));
      if (sgn(s_(t, j)) != 0) cleared = false;
    }
    return cleared;
  }

  std::optional<std::size_t> find_indivisible_row(std::size_t t) const {
    const mpz_class& pivot = s_(t, t);
    for (std::size_t i = t + 1; i < s_.rows(); ++i)
      for (std::size_t j = t + 1; j < s_.cols(); ++j)
        if (sgn(s_(i, j)) != 0 && !mpz_divisible_p(s_(i, j).get_mpz_t(), pivot.get_mpz_t())) return i;
    return std::nullopt;
  }

  IntMatrix s_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) { return SnfReducer(m).run(); }

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Elimination over the rationals

RowEchelon row_echelon(RatMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    const mpq_class inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      m.add_row_multiple(i, row, mpq_class(-m(i, col)));
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rational_rank(const RatMatrix& m) { return row_echelon(m).pivot_columns.size(); }

std::size_t image_rank(const IntMatrix& m) { return rational_rank(to_rational(m)); }

std::vector<RatVector> rational_kernel_basis(const RatMatrix& m) {
  const RowEchelon ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), mpq_class(0));
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) v[ech.pivot_columns[r]] = -ech.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> rational_image_basis(const RatMatrix& m) {
  std::vector<RatVector> basis;
  for (std::size_t c : row_echelon(m).pivot_columns) basis.push_back(m.column(c));
  return basis;
}

std::optional<RatVector> solve_rational(const RatMatrix& m, std::span<const mpq_class> b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match row count");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowEchelon ech = row_echelon(std::move(aug));
  RatVector x(m.cols(), mpq_class(0));
  for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
    if (ech.pivot_columns[r] == m.cols()) return std::nullopt;
    x[ech.pivot_columns[r]] = ech.reduced(r, m.cols());
  }
  return x;
}

IntVector primitive_integer_vector(std::span<const mpq_class> v) {
  mpz_class denom_lcm = 1;
  for (const auto& x : v) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (denom_lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (sgn(g) != 0)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

// ---------------------------------------------------------------------------
// Integer lattices

std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  const SnfDecomposition snf = smith_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t j = snf.rank; j < m.cols(); ++j) basis.push_back(snf.right.column(j));
  return basis;
}

std::vector<IntVector> integer_image_basis(const IntMatrix& m) {
  const SnfDecomposition snf = smith_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    IntVector col = snf.left_inverse.column(i);
    for (auto& x : col) x *= snf.diagonal(i, i);
    basis.push_back(std::move(col));
  }
  return basis;
}

bool is_direct_summand(const IntMatrix& m) {
  const auto d = smith_normal_form(m).divisors();
  return std::all_of(d.begin(), d.end(), [](const mpz_class& x) { return x == 1; });
}

namespace {

std::optional<IntVector> solve_with(const SnfDecomposition& snf, std::span<const mpz_class> b) {
  const IntVector c = snf.left * b;
  IntVector y(snf.right.rows(), mpz_class(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      const mpz_class& d = snf.diagonal(i, i);
      if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      y[i] = c[i] / d;
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf.right * y;
}

}  // namespace

std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const mpz_class> b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match row count");
  return solve_with(smith_normal_form(m), b);
}

std::vector<IntVector> annihilator_basis(std::span<const IntVector> generators, std::size_t ambient) {
  return integer_kernel_basis(IntMatrix::from_rows(generators, ambient));
}

ModuleStructure quotient_structure(const IntMatrix& m) {
  const SnfDecomposition snf = smith_normal_form(m);
  ModuleStructure out;
  out.free_rank = m.rows() - snf.rank;
  for (const auto& d : snf.divisors())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

bool lattice_contains(std::span<const IntVector> generators, std::span<const mpz_class> v, std::size_t ambient) {
  return solve_integer(IntMatrix::from_columns(generators, ambient), v).has_value();
}

bool sublattice_equal(std::span<const IntVector> a, std::span<const IntVector> b, std::size_t ambient) {
  const SnfDecomposition snf_a = smith_normal_form(IntMatrix::from_columns(a, ambient));
  const SnfDecomposition snf_b = smith_normal_form(IntMatrix::from_columns(b, ambient));
  for (const auto& x : a)
    if (!solve_with(snf_b, x)) return false;
  for (const auto& x : b)
    if (!solve_with(snf_a, x)) return false;
  return true;
}

bool is_saturated(std::span<const IntVector> generators, std::size_t ambient) {
  return is_direct_summand(IntMatrix::from_columns(generators, ambient));
}

std::optional<IntVector> saturation_witness(std::span<const IntVector> generators, std::size_t ambient) {
  const IntMatrix m = IntMatrix::from_columns(generators, ambient);
  const SnfDecomposition snf = smith_normal_form(m);
  const auto d = snf.divisors();
  const auto bad = std::find_if(d.begin(), d.end(), [](const mpz_class& x) { return x != 1; });
  if (bad == d.end()) return std::nullopt;

  const RatMatrix rational = to_rational(m);
  for (std::size_t i = 0; i < ambient; ++i) {
    const IntVector e = unit_vector(ambient, i);
    if (solve_rational(rational, to_rational(e)) && !solve_with(snf, e)) return e;
  }
  return snf.left_inverse.column(static_cast<std::size_t>(bad - d.begin()));
}

}  // namespace hyperhom
