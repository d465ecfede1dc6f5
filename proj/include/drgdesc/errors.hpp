#pragma once

#include <stdexcept>
#include <string>

namespace drg {

// Caller supplied something out of range or malformed.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size budget or operation budget was exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDistanceRegular : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonIntegralSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter array violates its case constraint or is not feasible.
class InfeasibleArray : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A theorem-backed invariant failed; signals a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace drg
