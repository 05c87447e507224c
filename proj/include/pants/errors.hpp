#pragma once
#include <stdexcept>

namespace pants {

// Bad input from a caller (out-of-range index, malformed text, ...).
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A guard tripped: the request is well-formed but too large for the
// configured limits.  The CLI maps this to its own exit code.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural invariant the construction is supposed to guarantee failed.
// Verification code surfaces these as check failures; they are never
// silently resolved.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pants
