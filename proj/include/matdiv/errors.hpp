#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matdiv {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotSolvable : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class TooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

// Thrown by the literal and matrix-file readers. line/column are 1-based;
// zero means "not associated with a position".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

} // namespace matdiv
