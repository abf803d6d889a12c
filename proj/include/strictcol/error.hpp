#pragma once

#include <stdexcept>
#include <string>

namespace strictcol {

// Base of every error this library raises on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text or JSON.
class ParseError : public Error {
public:
    using Error::Error;
};

// A configured size bound was exceeded.
class BoundError : public Error {
public:
    using Error::Error;
};

// Input violates an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed. This is a defect, never a user error.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void check_invariant(bool ok, const std::string& what)
{
    if (!ok)
        throw InvariantViolation(what);
}

} // namespace strictcol
