#pragma once

#include <stdexcept>
#include <string>

namespace pfcone {

// A documented precondition of an operation does not hold (e.g. lambda <= 0).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or out-of-domain user input (negative entry, ragged matrix, bad JSON).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Iterative method failed to converge or overflowed.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rational and float scalars met in one computation, or an exact quantity
// was requested that only exists in float form.
class ModeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two routes that must agree did not.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pfcone
