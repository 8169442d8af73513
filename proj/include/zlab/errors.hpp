#ifndef ZLAB_ERRORS_HPP
#define ZLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated operation precondition (CLI maps these to exit code 3).
struct PreconditionError : Error {
    using Error::Error;
};

struct OrderOfZeroError : PreconditionError {
    OrderOfZeroError() : PreconditionError("order of the zero polynomial is undefined") {}
};

struct ShapeError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotMPrimaryError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotIntegrallyClosedError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct OrderTooSmallError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotUnimodularError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct RankTooSmallError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Syntax error with a 1-based column and the offending token (CLI exit code 2).
struct ParseError : Error {
    ParseError(std::size_t column, std::string token, const std::string& what)
        : Error(what + " at column " + std::to_string(column) +
                (token.empty() ? std::string() : " near '" + token + "'")),
          column(column),
          token(std::move(token)) {}

    std::size_t column;
    std::string token;
};

// A runtime-certified identity failed; always a bug (CLI exit code 4).
struct VerificationError : Error {
    using Error::Error;
};

}  // namespace zlab

#endif
