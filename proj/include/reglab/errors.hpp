#pragma once

#include <stdexcept>
#include <string>

namespace reglab {

// Malformed input: bad vertex ids, empty sides, unparsable rationals.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented hypothesis of an operation does not hold, or a
// constructed object failed its re-verification.
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive routine would exceed its configured budget.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A complete search finished without finding the requested object.
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace reglab
