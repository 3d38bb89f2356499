// Polynomial expressions in z and w:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := 'z' | 'w' | rational | '(' expr ')'
// Rational literals are "p" or "p/q". Whitespace is ignored.
#pragma once

#include <string_view>
#include <vector>

#include "ksod/poly.hpp"

namespace ksod {

// Throws ParseError with the 1-based line and column of the offending
// character.
BiPoly parse_polynomial(std::string_view text);

// Comma-separated list of expressions (commas inside parentheses do not
// split).
std::vector<BiPoly> parse_polynomial_list(std::string_view text);

}  // namespace ksod
