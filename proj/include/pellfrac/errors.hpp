#pragma once

#include <stdexcept>
#include <string>

namespace pellfrac {

// Base for all library errors so callers can catch one type at the CLI edge.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input f (or D) is a perfect square; sqrt(f) is rational, no expansion exists.
struct PerfectSquareError : Error {
    using Error::Error;
};

// Argument outside the defined domain (f < 2, k = 0, empty quotient list, ...).
struct DomainError : Error {
    using Error::Error;
};

// D has a squared prime factor; carries no factor data, use is_squarefree for that.
struct NotSquarefreeError : Error {
    using Error::Error;
};

// Residue conditions required to transfer a family solution to a unit fail at t.
struct CongruenceError : Error {
    using Error::Error;
};

// A cross-check between two independent computations disagreed where agreement
// is guaranteed; indicates a bug, never expected on valid input.
struct MismatchError : Error {
    using Error::Error;
};

// The requested (family, f) pair satisfies no case of the family's expansion law.
struct NotCoveredError : Error {
    using Error::Error;
};

// A polynomial that must have integer coefficients came out fractional.
struct NonIntegralError : Error {
    using Error::Error;
};

// The computed (c, h) fits no congruence-table row; signals a table bug.
struct UnclassifiedError : Error {
    using Error::Error;
};

} // namespace pellfrac
