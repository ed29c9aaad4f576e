#pragma once

#include <string>

#include "milnor/poly.hpp"

namespace milnor {

/*
 * Parse a polynomial in x, y, z with integer or a/b rational coefficients.
 * Operators: + - * ^ and parentheses; multiplication may be left implicit
 * between factors (e.g. "3x", "xyz", "(x+y)(x-y)") except between two
 * numeric literals.  '/' is only valid inside a rational literal.
 * Throws SyntaxError (position-annotated) or NotHomogeneous.
 */
HomogeneousPoly parse_poly(const std::string& text);

} // namespace milnor
