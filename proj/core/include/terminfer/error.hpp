#pragma once

#include <stdexcept>
#include <string>

namespace terminfer {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed program text. Line and column are 1-based.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string &message, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Well-formed text that the analyzer refuses: unsupported control
/// constructs, directives, redefinition of imported predicates.
class ProgramError : public Error {
public:
    using Error::Error;
};

/// Ill-formed builtin-table file or formula.
class TableError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A per-SCC computation ran out of its allotted work. Callers degrade the
/// SCC to a safe value instead of propagating.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace terminfer
