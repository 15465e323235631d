#pragma once

#include <stdexcept>
#include <string>

namespace ptm {

/// Invalid input: bad dimensions, out-of-range parameters, malformed flags.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Iterative kernel failed to converge within its sweep limit.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mathematically valid input outside an operation's domain
/// (indefinite metric handed to hermitize, singular square root, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Closed-form coefficient hits a pole, e.g. alpha(lambda) at lambda = -1.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ptm
