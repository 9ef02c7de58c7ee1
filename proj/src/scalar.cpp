#include "hyperhom/scalar.hpp"

#include "hyperhom/error.hpp"

namespace hyperhom {

std::string_view to_string(Ring ring) {
  return ring == Ring::Integer ? "int" : "rat";
}

Scalar::Scalar(Ring ring, mpq_class value) : ring_(ring), value_(std::move(value)) {
  value_.canonicalize();
  if (ring_ == Ring::Integer && value_.get_den() != 1) {
    throw RingError("value " + exact_string(value_) + " is not an integer");
  }
}

void Scalar::require_same_ring(const Scalar& other) const {
  if (ring_ != other.ring_) {
    throw RingError("scalar ring mismatch");
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_ring(other);
  value_ += other.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_ring(other);
  value_ -= other.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_ring(other);
  value_ *= other.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_ring(other);
  if (ring_ != Ring::Rational) {
    throw RingError("division is not defined over the integers");
  }
  if (other.is_zero()) {
    throw RingError("division by zero");
  }
  value_ /= other.value_;
  return *this;
}

std::string Scalar::to_string() const { return exact_string(value_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::string exact_string(const mpq_class& value) { return value.get_str(); }

std::string exact_string(const mpz_class& value) { return value.get_str(); }

}  // namespace hyperhom
