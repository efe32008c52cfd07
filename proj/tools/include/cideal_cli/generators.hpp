#pragma once

// Monomial generator lists such as "x^2, x*y, y^3".
//
//   list     := monomial ("," monomial)*     optionally wrapped in "(" ")"
//   monomial := "1" | factor ("*" factor)*
//   factor   := ("x" | "y") ["^" digits]
//
// Whitespace is allowed between tokens; a repeated variable adds exponents.

#include <string>
#include <string_view>

#include "cideal/monomial.hpp"

namespace cideal::cli {

/// Throws DocumentError naming the column of the first bad character.
Staircase parse_generators(std::string_view text);

/// Minimal generators, increasing x-degree, without parentheses.
std::string format_generators(const Staircase& s);

}  // namespace cideal::cli
