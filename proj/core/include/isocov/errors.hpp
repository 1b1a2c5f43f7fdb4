#pragma once

#include <stdexcept>
#include <string>

namespace isocov {

/// Input is well-formed but violates a modelling rule (weights, bounds, ids).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input file could not be read or parsed. Carries a 1-based location when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A precondition or internal invariant was broken. Indicates a bug or API misuse.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace isocov
