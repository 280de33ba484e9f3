#pragma once

#include <stdexcept>
#include <string>

#include "gf2fourier/gf2poly.hpp"

namespace gf2f {

// Syntax or range error in polynomial text, with a 1-based source position.
struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Grammar (whitespace insignificant):
//   poly   := term ('+' term)*
//   term   := '1' | '0' | factor ('*'? factor)*
//   factor := 'x' INT          with 1 <= INT <= n_vars
// Repeated terms cancel mod 2. '0' denotes the zero polynomial (accepted so
// every printed polynomial parses back).
Gf2Poly parse_poly(const std::string& text, int n_vars);

// Canonical form: monomials ascending by mask, variables ascending joined
// with '*', terms joined with " + "; "1" for the constant term, "0" for the
// zero polynomial. parse_poly(poly_to_string(p), n) == p.
std::string poly_to_string(const Gf2Poly& p);

}  // namespace gf2f
