#pragma once

#include <stdexcept>
#include <string>

namespace hosoya {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index beyond the configured computation cap.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed form disagreed with its exact evaluation. Never expected for
// valid input; signals an implementation bug.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hosoya
