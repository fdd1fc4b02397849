#pragma once

#include <string_view>

#include "locring/field.hpp"
#include "locring/poly.hpp"

namespace locring {

/// Field descriptors: "Q", "F7", "F3(t)", "F2[a]/(a^2+a+1)", "Q[r]/(r^2-2)".
Field parse_field(std::string_view text);

/// Elements use the usual infix syntax with + - * / ^ and parentheses;
/// identifiers are the field's variable (t) or generator.
Element parse_element(const Field& field, std::string_view text);

/// Polynomials in `variable` with coefficients in the element syntax, e.g.
/// "x^3+x+1", "(1/2)*x^2-3", "t*x^2+1". Division is only by nonzero
/// constants. Errors are ParseError and name the offending token.
Poly parse_poly(const Field& field, std::string_view text, std::string_view variable = "x");

}  // namespace locring
