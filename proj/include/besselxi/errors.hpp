#pragma once

#include <stdexcept>
#include <string>

namespace besselxi {

/// Base class for every numerical failure raised by the library.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Argument sits on a pole (Γ at non-positive integers, ζ at 1, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result is not representable in binary64.
class OverflowError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A series or quadrature failed to reach its tolerance within its budget.
class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// An internal consistency check failed; signals a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace besselxi
