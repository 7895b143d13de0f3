#pragma once

#include <stdexcept>
#include <string>

namespace modfrac {

/// A denominator or value lies outside the range an operation accepts.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// A caller-supplied fraction breaks an operation's precondition,
/// e.g. it does not represent the residue it is checked against.
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation was invoked on a state it is not defined for.
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A mathematical invariant the algorithms rely on was observed broken.
/// Never expected; surfaced rather than recovered from.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// A brute-force or step-bounded computation was refused because its size
/// exceeds the configured ceiling.
struct CeilingExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace modfrac
