#include "planesyz/parse.hpp"

#include <cctype>
#include <string>

namespace planesyz {
namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    IntPolynomial p = poly();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  IntPolynomial poly() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    IntPolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      IntPolynomial t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  IntPolynomial term() {
    skip_space();
    IntPolynomial acc;
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      acc = IntPolynomial::constant(coefficient());
      have_any = true;
    } else {
      acc = IntPolynomial::constant(mpz_class(1));
    }
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '*') {
        if (!have_any) fail("'*' without a left operand");
        ++pos_;
        skip_space();
        if (std::isalpha(static_cast<unsigned char>(peek())) && !starts_factor(peek()))
          fail("unknown variable '" + std::string(1, peek()) + "'");
        if (!starts_factor(peek())) fail("expected a factor after '*'");
      } else if (!starts_factor(c)) {
        if (std::isalpha(static_cast<unsigned char>(c)))
          fail("unknown variable '" + std::string(1, c) + "'");
        if (std::isdigit(static_cast<unsigned char>(c))) fail("coefficient must lead its term");
        break;
      }
      acc *= factor();
      have_any = true;
    }
    if (!have_any) fail(pos_ < text_.size() ? "expected a term" : "unexpected end of input");
    return acc;
  }

  IntPolynomial factor() {
    skip_space();
    IntPolynomial base;
    char c = peek();
    if (c == '(') {
      ++pos_;
      base = poly();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      base = IntPolynomial::variable(c - 'x', mpz_class(1));
    } else {
      fail("expected a factor");
    }
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      mpz_class e = coefficient();
      if (e > kMaxExponent) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()), mpz_class(1));
    }
    return base;
  }

  mpz_class coefficient() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' || peek() == '/') fail("coefficients must be integers");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  static bool starts_factor(char c) { return c == '(' || c == 'x' || c == 'y' || c == 'z'; }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace planesyz
