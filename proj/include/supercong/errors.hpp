#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result cannot be pinned down at the requested precision; callers retry
// with a larger guard before surfacing this.
struct PrecisionLoss : Error {
    using Error::Error;
};

struct DivisionByExactZero : Error {
    DivisionByExactZero() : Error("division by exact zero") {}
};

// Requested a residue of a value with negative valuation (not a p-integer).
struct NegativeValuation : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NotPIntegral : Error {
    using Error::Error;
};

// A parameter violates a congruence's nondegeneracy hypothesis
// (e.g. s = -1 mod p, or b + <-b>_p = 0 mod p^2).
struct DegenerateParameter : Error {
    using Error::Error;
};

struct NotRepresentable : Error {
    using Error::Error;
};

// More than one solution survives a normalization that is supposed to be
// unique. Must never fire; a hard error rather than a warning.
struct AmbiguousNormalization : Error {
    using Error::Error;
};

} // namespace supercong
