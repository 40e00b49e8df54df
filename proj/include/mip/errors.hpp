#pragma once

#include <stdexcept>
#include <string>

namespace mip {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// Input table or generator list is not a valid group.
struct NotAPermutation : Error {
    using Error::Error;
};

// Dimino closure exceeded the order cap.
struct OrderCapExceeded : Error {
    using Error::Error;
};

struct NotNormal : Error {
    using Error::Error;
};

struct NotAbelian : Error {
    using Error::Error;
};

struct NotPGroup : Error {
    using Error::Error;
};

// Isomorphism backtracking ran past its node budget.
struct SearchBudgetExceeded : Error {
    using Error::Error;
};

// An exhaustive path was requested on a space too large to enumerate.
struct EnumerationTooLarge : Error {
    using Error::Error;
};

// A constructed object failed its own consistency checks.
struct ValidationFailed : Error {
    using Error::Error;
};

// A verification routine found a counterexample to an identity it checks.
struct CheckFailed : Error {
    using Error::Error;
};

} // namespace mip
