#pragma once

#include <stdexcept>
#include <string>

namespace firlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion of zero, division by the zero polynomial, and friends.
class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// A precondition on operands was violated (unit where a non-unit is
/// required, non-atom where an atom is required, mixed rings, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Operation not supported by the coefficient backend (e.g. element
/// enumeration over an infinite field).
class BackendError : public Error {
public:
    explicit BackendError(const std::string& what) : Error(what) {}
};

/// Text input could not be parsed; `position` is a 0-based offset into the
/// input naming the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A consistency condition that is guaranteed by a theorem failed.  This is
/// a bug in the library (or a counterexample to the theorem), never a user
/// error, hence logic_error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace firlab
