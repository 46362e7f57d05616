#pragma once

#include <stdexcept>
#include <string>

namespace vesicle {

// All library failures derive from Error so callers (the CLI in particular)
// can map them onto a single exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's supported range (n too large, order too large, ...).
class BoundsError : public Error {
public:
  using Error::Error;
};

/// Parameter outside the mathematical domain (non-positive fugacity, q >= 1 for H, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A data structure violates its documented invariant (e.g. crossing walks).
class InvariantError : public Error {
public:
  using Error::Error;
};

/// Floating-point range exhausted; the message suggests the log-space variant.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Evaluation at or beyond a singularity: vanishing denominator, negative
/// radicand, pole of a continued fraction or of an asymptotic formula.
class SingularityError : public Error {
public:
  SingularityError(const std::string& what, double value = 0.0)
      : Error(what), value_(value) {}
  /// The offending denominator / radicand.
  double value() const noexcept { return value_; }

private:
  double value_;
};

/// Iterative procedure did not meet its tolerance (series, continued
/// fraction depth doubling, bracketing).
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// Data handed to a power-law fit cannot be log-transformed.
class FitDomainError : public Error {
public:
  using Error::Error;
};

}  // namespace vesicle
