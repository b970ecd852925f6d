#pragma once

// Recursive-descent parser for polynomial expressions:
//
//   expr     := '-'? term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | 'x' | 'y' | 'u' | 'v' | '(' expr ')'
//   rational := nat | nat '/' nat
//
// Whitespace is insignificant; there is no implicit multiplication ("3x" is
// an error). The optional leading '-' and the u/v atoms exist so that every
// canonically rendered polynomial parses back to itself.

#include <cctype>
#include <string>

#include "keller/curve.hpp"
#include "keller/errors.hpp"
#include "keller/mpoly.hpp"
#include "keller/rational.hpp"

namespace keller {

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : s_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ < s_.size())
      throw SyntaxError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MPoly expr() {
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    }
    MPoly p = term();
    if (neg) p = -p;
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        MPoly t = term();
        p = c == '+' ? p + t : p - t;
      } else {
        return p;
      }
    }
  }

  MPoly term() {
    MPoly p = factor();
    while (peek() == '*') {
      ++pos_;
      p *= factor();
    }
    return p;
  }

  MPoly factor() {
    MPoly b = base();
    if (peek() == '^') {
      ++pos_;
      long e = nat("exponent");
      if (e > MPoly::kMaxExp) throw SyntaxError("exponent too large", pos_);
      b = b.pow(e);
    }
    return b;
  }

  MPoly base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (c == 'x') { ++pos_; return MPoly::variable(Var::x); }
    if (c == 'y') { ++pos_; return MPoly::variable(Var::y); }
    if (c == 'u') { ++pos_; return MPoly::variable(Var::u); }
    if (c == 'v') { ++pos_; return MPoly::variable(Var::v); }
    if (std::isdigit(static_cast<unsigned char>(c))) return MPoly::constant(rational());
    if (c == '\0') throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  Rational rational() {
    mpz_class num = digits("number");
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      mpz_class den = digits("denominator");
      if (den == 0) throw SyntaxError("zero denominator", pos_ - 1);
      return Rational(num, den);
    }
    return Rational(num);
  }

  long nat(const char* what) {
    mpz_class n = digits(what);
    if (!n.fits_slong_p()) throw SyntaxError(std::string(what) + " too large", pos_);
    return n.get_si();
  }

  mpz_class digits(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::string ds;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ds += s_[pos_++];
    if (ds.empty()) throw SyntaxError(std::string("expected ") + what, start);
    return mpz_class(ds);
  }
};

}  // namespace detail

inline MPoly parse_poly(const std::string& text) { return detail::ExprParser(text).parse(); }

// Parses and extracts a monic-in-y curve; auto-scaling warnings (if any) are
// appended to *warnings.
inline CurveF parse_curve(const std::string& text, std::vector<std::string>* warnings = nullptr) {
  return curve_from_poly(parse_poly(text), warnings);
}

}  // namespace keller
