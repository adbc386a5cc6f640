// Error types shared by every vinozeta module.
#pragma once

#include <stdexcept>
#include <string>

namespace vinozeta {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request exceeds a configured table size or enumeration guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A stated hypothesis does not hold for the given parameters.
/// `what()` names the violated condition.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The parameter r is not admissible for one complete-system step.
class InvalidR : public Error {
 public:
  using Error::Error;
};

/// A complete-system step failed to lower the exponent surplus.
class NoImprovement : public Error {
 public:
  using Error::Error;
};

/// A numerical check that must hold did not.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace vinozeta
