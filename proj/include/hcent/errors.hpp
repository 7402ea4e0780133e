#pragma once

#include <stdexcept>
#include <string>

namespace hcent {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input dimension or vertex count outside the supported range.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Malformed argument (index out of range, bad subset, bad scheme parameter).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Partition scheme incompatible with the requested dimension.
class SchemeError : public Error {
public:
    using Error::Error;
};

/// Edge-list text that cannot be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Matrix expected to be symmetric positive definite is not.
class DefinitenessError : public Error {
public:
    using Error::Error;
};

/// gamma too close to 1, or a recursion denominator vanished.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Value outside the mathematical domain of a function (e.g. nu < 1).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Schur elimination hit a singular pivot block.
class EliminationError : public Error {
public:
    using Error::Error;
};

/// Oracle produced a symplectic eigenvalue below the physical bound.
class NumericalConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace hcent
