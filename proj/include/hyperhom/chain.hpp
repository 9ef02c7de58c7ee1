#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <span>

#include "hyperhom/error.hpp"
#include "hyperhom/matrix.hpp"
#include "hyperhom/scalar.hpp"

namespace hyperhom {

enum class ChainKind { Chain, Cochain };

/// Sparse formal sum over the vertex basis (dimension 0) or the edge basis
/// (dimension 1). Only nonzero coefficients are stored, and all of them lie
/// in `ring()`.
///
/// Chains and cochains share this representation; a cochain is the
/// homomorphism that pairs its coefficient vector with a chain's.
template <ChainKind Kind>
class BasicChain {
 public:
  BasicChain(int dimension, Ring ring) : dimension_(dimension), ring_(ring) {
    if (dimension != 0 && dimension != 1) throw DimensionError("chains exist in dimension 0 and 1 only");
  }

  /// The basis element with index `index` (a vertex or an edge).
  static BasicChain basis(int dimension, Ring ring, std::size_t index) {
    BasicChain c(dimension, ring);
    c.add(index, mpq_class(1));
    return c;
  }

  static BasicChain from_dense(int dimension, Ring ring, std::span<const mpq_class> values) {
    BasicChain c(dimension, ring);
    for (std::size_t i = 0; i < values.size(); ++i) c.add(i, values[i]);
    return c;
  }

  static BasicChain from_dense(int dimension, Ring ring, std::span<const mpz_class> values) {
    BasicChain c(dimension, ring);
    for (std::size_t i = 0; i < values.size(); ++i) c.add(i, mpq_class(values[i]));
    return c;
  }

  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] Ring ring() const { return ring_; }
  [[nodiscard]] const std::map<std::size_t, mpq_class>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Scalar coefficient(std::size_t index) const {
    auto it = terms_.find(index);
    return Scalar(ring_, it == terms_.end() ? mpq_class(0) : it->second);
  }

  /// Adds `value` to the coefficient at `index`.
  void add(std::size_t index, mpq_class value) {
    value.canonicalize();
    if (ring_ == Ring::Integer && value.get_den() != 1) {
      throw RingError("non-integral coefficient " + exact_string(value) + " in an integer chain");
    }
    if (sgn(value) == 0) return;
    auto [it, inserted] = terms_.try_emplace(index, value);
    if (!inserted) {
      it->second += value;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add(std::size_t index, const Scalar& value) {
    if (value.ring() != ring_) throw RingError("coefficient ring differs from chain ring");
    add(index, value.value());
  }

  /// Largest index with a nonzero coefficient plus one; 0 for the zero chain.
  [[nodiscard]] std::size_t support_bound() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first + 1;
  }

  /// Dense coefficient vector of length `n`; throws IndexError if the chain
  /// has support outside [0, n).
  [[nodiscard]] RatVector to_dense(std::size_t n) const {
    require_within(n);
    RatVector v(n, mpq_class(0));
    for (const auto& [i, c] : terms_) v[i] = c;
    return v;
  }

  /// Throws RingError if a coefficient is not an integer.
  [[nodiscard]] IntVector to_integer_dense(std::size_t n) const {
    require_within(n);
    IntVector v(n, mpz_class(0));
    for (const auto& [i, c] : terms_) {
      if (c.get_den() != 1) throw RingError("chain has a non-integral coefficient");
      v[i] = c.get_num();
    }
    return v;
  }

  void require_within(std::size_t n) const {
    if (support_bound() > n) {
      throw IndexError("basis index " + std::to_string(support_bound() - 1) + " out of range (size " +
                       std::to_string(n) + ")");
    }
  }

  /// The same coefficients read in another ring.
  [[nodiscard]] BasicChain in_ring(Ring ring) const {
    BasicChain c(dimension_, ring);
    for (const auto& [i, v] : terms_) c.add(i, v);
    return c;
  }

  BasicChain& operator+=(const BasicChain& other) {
    require_compatible(other);
    for (const auto& [i, v] : other.terms_) add(i, v);
    return *this;
  }
  BasicChain& operator-=(const BasicChain& other) {
    require_compatible(other);
    for (const auto& [i, v] : other.terms_) add(i, mpq_class(-v));
    return *this;
  }
  friend BasicChain operator+(BasicChain a, const BasicChain& b) { return a += b; }
  friend BasicChain operator-(BasicChain a, const BasicChain& b) { return a -= b; }
  BasicChain operator-() const { return scaled(Scalar(ring_, mpq_class(-1))); }

  [[nodiscard]] BasicChain scaled(const Scalar& factor) const {
    if (factor.ring() != ring_) throw RingError("scaling by a scalar of another ring");
    BasicChain c(dimension_, ring_);
    for (const auto& [i, v] : terms_) c.add(i, mpq_class(v * factor.value()));
    return c;
  }
  friend BasicChain operator*(const Scalar& factor, const BasicChain& c) { return c.scaled(factor); }

  friend bool operator==(const BasicChain&, const BasicChain&) = default;

  void require_compatible(const BasicChain& other) const {
    if (other.ring_ != ring_) throw RingError("chain ring mismatch");
    if (other.dimension_ != dimension_) throw DimensionError("chain dimension mismatch");
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicChain& c) {
    const char* symbol = Kind == ChainKind::Chain ? (c.dimension_ == 0 ? "v" : "e")
                                                  : (c.dimension_ == 0 ? "phi" : "psi");
    if (c.terms_.empty()) return os << '0';
    bool first = true;
    for (const auto& [i, v] : c.terms_) {
      if (!first) os << (sgn(v) < 0 ? " - " : " + ");
      else if (sgn(v) < 0) os << '-';
      mpq_class a = abs(v);
      if (a != 1) os << a;
      os << symbol << i;
      first = false;
    }
    return os;
  }

 private:
  int dimension_ = 0;
  Ring ring_ = Ring::Integer;
  std::map<std::size_t, mpq_class> terms_;
};

using Chain = BasicChain<ChainKind::Chain>;
using Cochain = BasicChain<ChainKind::Cochain>;

/// ψ(x): the coefficient-wise pairing. Same dimension and ring required.
Scalar evaluate(const Cochain& psi, const Chain& x);

/// Chain → cochain sending each basis element to its Kronecker dual.
Cochain gamma(const Chain& c);
Chain gamma_inverse(const Cochain& psi);

}  // namespace hyperhom
