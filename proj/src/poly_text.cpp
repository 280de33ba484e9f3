#include "gf2fourier/poly_text.hpp"

#include <cctype>

namespace gf2f {

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(line, col, what); }

  // Reads 'x' INT; returns the 0-based variable index.
  int variable(int n_vars) {
    int at_line = line, at_col = col;
    advance();  // past 'x'
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(line, col, "expected a variable index after 'x'");
    long idx = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      idx = idx * 10 + (text[pos] - '0');
      if (idx > 1000000) throw ParseError(at_line, at_col, "variable index too large");
      advance();
    }
    if (idx < 1 || idx > n_vars)
      throw ParseError(at_line, at_col,
                       "variable index " + std::to_string(idx) +
                           " out of range 1.." + std::to_string(n_vars));
    return static_cast<int>(idx - 1);
  }
};

}  // namespace

Gf2Poly parse_poly(const std::string& text, int n_vars) {
  check_var_count(n_vars);
  Scanner sc{text};
  std::vector<Mask> monomials;
  bool expect_term = true;
  while (true) {
    if (sc.done()) {
      if (expect_term) sc.fail("expected a term");
      break;
    }
    if (expect_term) {
      char c = sc.peek();
      if (c == '1') {
        sc.advance();
        monomials.push_back(0);
      } else if (c == '0') {
        sc.advance();  // additive identity: contributes nothing
      } else if (c == 'x') {
        Mask m = 0;
        bool after_star = false;
        while (true) {
          if (!sc.done() && sc.peek() == 'x') {
            m |= Mask{1} << sc.variable(n_vars);
            after_star = false;
            continue;
          }
          if (!sc.done() && sc.peek() == '*') {
            if (after_star) sc.fail("expected a factor after '*'");
            sc.advance();
            after_star = true;
            continue;
          }
          if (after_star) sc.fail("expected a factor after '*'");
          break;
        }
        monomials.push_back(m);
      } else {
        sc.fail(std::string("unexpected character '") + c + "'");
      }
      expect_term = false;
    } else {
      if (sc.peek() != '+')
        sc.fail(std::string("expected '+' before '") + sc.peek() + "'");
      sc.advance();
      expect_term = true;
    }
  }
  return Gf2Poly(n_vars, std::move(monomials));
}

std::string poly_to_string(const Gf2Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (Mask m : p.monomials()) {
    if (!first) out += " + ";
    first = false;
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first_var = true;
    for (int i = 0; i < p.n_vars(); ++i)
      if (m >> i & 1) {
        if (!first_var) out += "*";
        out += "x" + std::to_string(i + 1);
        first_var = false;
      }
  }
  return out;
}

}  // namespace gf2f
