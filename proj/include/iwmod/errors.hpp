#pragma once

#include <stdexcept>
#include <string>

namespace iwmod {

/// A stated hypothesis of an operation does not hold for the given input.
/// `hypothesis()` names the violated condition verbatim.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(std::string hypothesis, const std::string& detail)
        : std::invalid_argument(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

/// The answer depends on digits beyond the working precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + msg),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace iwmod
