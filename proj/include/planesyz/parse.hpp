#pragma once

#include <string_view>

#include "planesyz/polynomial.hpp"

namespace planesyz {

/// Recursive-descent parser for the polynomial text grammar:
///
///   poly   := sign? term (('+'|'-') term)*
///   term   := coeff? ('*'? factor)*
///   factor := ('x'|'y'|'z'|'(' poly ')') ('^' uint)?
///   coeff  := uint
///
/// Whitespace is ignored. Coefficients are arbitrary-size integers.
/// Throws Error(ParseError) naming the offending 0-based position.
IntPolynomial parse_polynomial(std::string_view text);

template <typename F>
Polynomial<typename F::Elem> parse_polynomial(std::string_view text, const F& field) {
  return to_field(parse_polynomial(text), field);
}

}  // namespace planesyz
