#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walg {

// Exact division by a zero scalar (the float backend raises this too when the
// divisor is exactly 0.0, so no operation silently produces NaN).
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

// An ideal-norm or parametrization query on an element outside the ideal.
struct NotInIdeal : std::domain_error {
    explicit NotInIdeal(const std::string& what) : std::domain_error(what) {}
};

// Text input rejected; `position` is the byte offset of the offending character.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

}  // namespace walg
