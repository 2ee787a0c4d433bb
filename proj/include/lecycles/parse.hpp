#pragma once

#include <stdexcept>
#include <string>

#include "lecycles/polynomial.hpp"

namespace lecycles {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Parse an expression over +, -, *, ^ (positive integer exponents), integer
/// and rational literals, parentheses, and the declared variable names.
/// Whitespace is insignificant. The result is fully expanded canonical form.
Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars);

}  // namespace lecycles
