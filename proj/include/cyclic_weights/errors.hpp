#pragma once

#include <stdexcept>
#include <string>

namespace cyclic_weights {

// Tuple lengths or list sizes that do not match.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value outside the set the operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// f = 1: the gr^1 / mu machinery only exists for f > 1.
class UnsupportedDegreeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The twist formula produced an odd numerator.
class IntegralityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Something the construction guarantees did not hold. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclic_weights
