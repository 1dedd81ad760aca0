#ifndef HANS_ERRORS_HPP
#define HANS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hans {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Positions are 1-based.
struct ParseError : Error {
    ParseError(std::string msg, int line, int col)
        : Error(std::move(msg)), line(line), col(col) {}
    int line;
    int col;
};

/// Structurally well-formed input that violates a system invariant
/// (duplicate norm, inconsistent context, negative rank, infeasible
/// generator counts).
struct ValidationError : Error {
    explicit ValidationError(std::string msg, int line = 0, int col = 0)
        : Error(std::move(msg)), line(line), col(col) {}
    int line;  // 0 when no source position applies
    int col;
};

/// An operation was called outside its stated domain (tied ranks where a
/// total order is required, complement of top, expanding a last-link
/// graph, ...).
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace hans

#endif
