#pragma once

#include <cctype>
#include <string>

#include "landen/poly.hpp"
#include "landen/ratfunc.hpp"
#include "landen/scalar.hpp"

namespace landen {

// Polynomials in x written as "3x+5", "x^4 - 3/2x^2 + 1", "-x^3".
//   expr  := term (('+'|'-') term)*
//   term  := coeff? '*'? 'x' ('^' uint)? | coeff
//   coeff := digits ('/' digits | '.' digits)?
class PolyParser {
 public:
  explicit PolyParser(std::string src) : s_(std::move(src)) {}

  QPoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    QPoly acc;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += term() * BigRat(sign);
      first = false;
      skip();
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw invalid_input("polynomial \"" + s_ + "\": " + what + " at column " + std::to_string(pos_ + 1));
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    return d;
  }

  QPoly term() {
    BigRat c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      } else if (peek() == '.') {
        ++pos_;
        std::string frac = digits();
        if (frac.empty()) fail("missing digits after '.'");
        num += "." + frac;
      }
      c = parse_rat(num);
      have_coeff = true;
      skip();
    }
    if (peek() == '*') {
      if (!have_coeff) fail("'*' without coefficient");
      ++pos_;
      skip();
      if (peek() != 'x') fail("expected 'x' after '*'");
    }
    if (peek() != 'x') {
      if (!have_coeff) fail("expected coefficient or 'x'");
      return QPoly::constant(c);
    }
    ++pos_;
    skip();
    long k = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      std::string e = digits();
      if (e.empty()) fail("expected exponent");
      if (e.size() > 6) fail("exponent too large");
      k = std::stol(e);
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) fail("only the variable x is allowed");
    return QPoly::monomial(c, static_cast<int>(k));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline QPoly parse_poly(const std::string& s) { return PolyParser(s).parse(); }

inline QRatFunc parse_ratfunc(const std::string& num, const std::string& den) {
  QPoly d = parse_poly(den);
  if (d.is_zero()) throw invalid_input("denominator is the zero polynomial");
  return QRatFunc(parse_poly(num), d);
}

}  // namespace landen
