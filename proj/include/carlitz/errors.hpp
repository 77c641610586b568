#ifndef CARLITZ_ERRORS_HPP
#define CARLITZ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace carlitz {

// Base of everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input from the caller (CLI maps these to exit code 1).
struct UserError : Error {
    using Error::Error;
};

struct NotPrime : UserError {
    explicit NotPrime(long long p) : UserError("not a prime: " + std::to_string(p)) {}
};
struct NotIrreducible : UserError {
    using UserError::UserError;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct NotMonic : UserError {
    using UserError::UserError;
};
struct ConstantModulus : UserError {
    ConstantModulus() : UserError("modulus must have degree >= 1") {}
};
struct NotAUnit : UserError {
    using UserError::UserError;
};
struct NotExactDivisor : UserError {
    using UserError::UserError;
};
struct ZeroArgument : Error {
    ZeroArgument() : Error("zero has no character value") {}
};
struct TrivialCharacter : Error {
    TrivialCharacter() : Error("L-polynomial requires a nontrivial primitive character") {}
};
struct GroupTooLarge : UserError {
    GroupTooLarge(long long phi, long long limit)
        : UserError("unit group order " + std::to_string(phi) + " exceeds limit " +
                    std::to_string(limit)) {}
};
struct DegreeTooSmall : UserError {
    using UserError::UserError;
};

struct SyntaxError : UserError {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : UserError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A proven identity failed: always an implementation bug, never user error.
// The CLI maps these to exit code 2.
struct InternalCheckError : Error {
    using Error::Error;
};
struct InexactDivision : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};
struct NonIntegerCoefficient : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};
struct EmbeddingMismatch : InternalCheckError {
    using InternalCheckError::InternalCheckError;
};

} // namespace carlitz

#endif
