#pragma once

#include <stdexcept>
#include <string>

namespace wsc {

/// Malformed or out-of-range user input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A search that should succeed by a theorem came back empty.
/// Raised separately so callers can tell "bad input" from "counterexample".
class TheoremViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsc
