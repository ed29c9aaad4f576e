#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

/* Base class for every error this library raises deliberately. */
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Input-side errors (CLI exit code 2). */
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

struct DegreeTooSmall : Error {
    using Error::Error;
};

struct NonIsolatedSingularities : Error {
    using Error::Error;
};

struct UnknownCurve : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/* Inconclusive-result errors (CLI exit code 3). */
struct InconclusiveBound : Error {
    using Error::Error;
};

struct Uncertified : Error {
    using Error::Error;
};

/* Internal invariant violations: always a bug, never a user error. */
struct OrbitInconsistency : Error {
    using Error::Error;
};

struct NonPolynomialResult : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

} // namespace milnor
