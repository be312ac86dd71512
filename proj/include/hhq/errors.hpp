#pragma once

#include <stdexcept>
#include <string>

namespace hhq {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Evaluation outside a function's domain, or an interval that leaves it.
class DomainViolation : public Error {
  public:
    using Error::Error;
};

/// Exact integration requested for a function without an antiderivative.
class MissingAntiderivative : public Error {
  public:
    using Error::Error;
};

/// The adaptive integrator exhausted its evaluation budget.
class NoConvergence : public Error {
  public:
    using Error::Error;
};

/// A convexity/concavity hypothesis required by a bound was not admitted.
class HypothesisFailed : public Error {
  public:
    using Error::Error;
};

/// An exponent parameter outside its valid range (p <= 1, q < 1, ...).
class InvalidExponent : public Error {
  public:
    using Error::Error;
};

/// Mean arguments violating the definition's preconditions.
class InvalidMeanInput : public Error {
  public:
    using Error::Error;
};

} // namespace hhq
