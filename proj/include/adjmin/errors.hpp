#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adjmin {

// A computation exceeded an explicit resource budget (basis size, degree,
// wall clock, enumeration rank). Never a silent wrong answer.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input; offset is the byte position of the failure.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// A precondition on arguments was violated.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace adjmin
