#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

// Bad user-facing input: unparsable series literal, malformed JSON/DOT.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its contract (f(0) != 0, mismatched
// moduli, insufficient truncation, ...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive computation would exceed the configured candidate budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two routes that must agree (formula blocks vs direct submatrices,
// witness reconstruction) disagreed.  Always a bug, never user error.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace riordan
