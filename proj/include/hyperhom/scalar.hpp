#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace hyperhom {

/// Coefficient ring of chains, cochains and matrices.
enum class Ring { Integer, Rational };

std::string_view to_string(Ring ring);

/// An exact coefficient tagged with its ring.
///
/// Values are kept as canonical GMP rationals (lowest terms, positive
/// denominator). A scalar in the Integer ring always has denominator 1.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Ring ring, mpq_class value = 0);
  Scalar(Ring ring, long value) : Scalar(ring, mpq_class(value)) {}

  static Scalar integer(const mpz_class& value) { return Scalar(Ring::Integer, mpq_class(value)); }
  static Scalar rational(const mpq_class& value) { return Scalar(Ring::Rational, value); }

  [[nodiscard]] Ring ring() const { return ring_; }
  [[nodiscard]] const mpq_class& value() const { return value_; }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integral() const { return value_.get_den() == 1; }

  /// Same value reinterpreted in `ring`; throws RingError when a non-integral
  /// rational is moved into the integers.
  [[nodiscard]] Scalar in_ring(Ring ring) const { return Scalar(ring, value_); }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Only defined over the rationals.
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(ring_, mpq_class(-value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.value_ < b.value_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.value_ > b.value_; }

  [[nodiscard]] std::string to_string() const;

 private:
  void require_same_ring(const Scalar& other) const;

  Ring ring_ = Ring::Integer;
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Canonical decimal text of an exact value: "7", "-3/2".
std::string exact_string(const mpq_class& value);
std::string exact_string(const mpz_class& value);

}  // namespace hyperhom
