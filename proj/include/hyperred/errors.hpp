#pragma once

#include <stdexcept>
#include <string>

namespace hyperred {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation received a zero polynomial where a nonzero one is required.
struct ZeroInputError : Error {
    using Error::Error;
};

// Malformed rational, polynomial, or JSON input.
struct ParseError : Error {
    using Error::Error;
};

// A theorem hypothesis does not hold for the given input.
struct HypothesisError : Error {
    using Error::Error;
};

// b is not symmetric about the requested center.
struct SymmetryError : Error {
    using Error::Error;
};

// a is not the requested signed shift of b.
struct ShiftError : Error {
    using Error::Error;
};

// A claimed coefficient divisibility failed; signals an implementation bug,
// not a bad input.
struct DivisibilityError : Error {
    using Error::Error;
};

// A rational with p in its denominator cannot be reduced modulo p^e.
struct NotPIntegralError : Error {
    using Error::Error;
};

}  // namespace hyperred
