#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prolong/polynomial.hpp"

namespace prolong {

// Expression grammar (whitespace insignificant):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' uint)?
//   atom   := int | 't' | identifier | '(' expr ')'
// `t` denotes the field generator and is legal only over Q(t).

/// Parse a rational expression in the declared variables.
RationalFunction parse_rational(std::string_view src, const std::vector<std::string>& vars, Field field);

/// Parse a polynomial; a non-constant denominator is NotPolynomial.
MultiPoly parse_poly(std::string_view src, const std::vector<std::string>& vars, Field field);

/// Parse a base field element (no variables).
BaseElem parse_elem(std::string_view src, Field field);

/// Parse a comma-separated list of base field elements.
std::vector<BaseElem> parse_point(std::string_view src, Field field);

std::string format(const MultiPoly& p, const std::vector<std::string>& vars);
std::string format(const RationalFunction& r, const std::vector<std::string>& vars);

}  // namespace prolong
