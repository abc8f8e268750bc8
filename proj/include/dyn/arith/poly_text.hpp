#pragma once

#include <string_view>
#include <utility>

#include "dyn/arith/bipoly.hpp"
#include "dyn/arith/unipoly.hpp"

namespace dyn {

// Parses an expression in x and t built from integer literals, + - * / ^
// and parentheses, e.g. "t*(x-1)/x^2" or "(2x-1)/(t x^2 - 1)". Juxtaposition
// means multiplication. The result is an unreduced numerator/denominator pair.
std::pair<BiPoly, BiPoly> parse_fraction(std::string_view text);

// Polynomial in x and t; division is only allowed by nonzero constants.
BiPoly parse_bipoly(std::string_view text);
// Polynomial in x alone.
UniPoly parse_unipoly(std::string_view text);
// Comma-separated rational coefficients, constant term first: "1,0,-2".
UniPoly parse_coefficient_list(std::string_view text);

}  // namespace dyn
