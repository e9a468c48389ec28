#pragma once

#include <stdexcept>
#include <string>

namespace symcone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The caller supplied something outside an operation's domain: mismatched
/// algebras, non-interior points, non-projections, malformed descriptors.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation ran but its result failed a residual or consistency
/// threshold (eigensolver failure, linearization defect, round-trip error).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace symcone
