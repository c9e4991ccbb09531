#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgpot {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (expressions, scalar strings, JSON payloads).
/// Carries the byte offset of the first offending character.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t at)
        : Error(msg + " at offset " + std::to_string(at)), offset(at) {}
};

/// Violated precondition: variable-list or tower mismatch, zero monodromy,
/// non-unimodular matrix, arity mismatch, and the like.
struct DomainError : Error {
    using Error::Error;
};

/// Integer exponent arithmetic left the machine-word range.
struct OverflowError : Error {
    using Error::Error;
};

/// An exact linear system had no solution, or had more than one.
struct SolveError : Error {
    enum class Kind { Inconsistent, Underdetermined };
    Kind kind;
    /// Dimension of the solution space (0 for inconsistent systems).
    std::size_t nullity;

    SolveError(Kind k, std::size_t dim, const std::string& msg)
        : Error(msg), kind(k), nullity(dim) {}
};

} // namespace lgpot
