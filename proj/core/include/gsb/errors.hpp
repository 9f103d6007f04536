#pragma once

#include <stdexcept>
#include <string>

namespace gsb {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mixing values from different alphabets or coefficient domains.
struct DomainError : Error {
  using Error::Error;
};

/// Leading-term query on the zero polynomial.
struct EmptyPolynomialError : Error {
  using Error::Error;
};

/// A rule whose right-hand side is not order-smaller than its left-hand side.
struct OrientationError : Error {
  using Error::Error;
};

/// A reduction exceeded its step budget.
struct StepBudgetError : Error {
  using Error::Error;
};

/// A construction exceeded a configured resource cap (states, iterations).
struct ResourceError : Error {
  using Error::Error;
};

/// The presented algebra collapses: 1 lies in the ideal.
struct InconsistentPresentationError : Error {
  using Error::Error;
};

/// Operation applied to a system kind it does not support.
struct UnsupportedKindError : Error {
  using Error::Error;
};

}  // namespace gsb
