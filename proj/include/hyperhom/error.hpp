#pragma once

#include <stdexcept>
#include <string>

namespace hyperhom {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands carry different coefficient rings, or a value does not belong to
/// the ring it was declared in.
class RingError : public Error {
 public:
  using Error::Error;
};

/// A chain or cochain refers to a basis index outside the hypergraph.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Matrix or vector shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperhom
