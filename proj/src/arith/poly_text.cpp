#include "dyn/arith/poly_text.hpp"

#include <cctype>
#include <string>

#include "dyn/errors.hpp"

namespace dyn {

namespace {

struct Fraction {
  BiPoly num = BiPoly::constant(0);
  BiPoly den = BiPoly::constant(1);
};

Fraction add(const Fraction& a, const Fraction& b, bool negate) {
  BiPoly rhs = b.num * a.den;
  if (negate) rhs = -rhs;
  if (a.den == b.den) return {a.num + (negate ? -b.num : b.num), a.den};
  return {a.num * b.den + rhs, a.den * b.den};
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Fraction parse_all() {
    Fraction f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Fraction expr() {
    Fraction acc;
    bool first = true;
    for (;;) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        return acc;
      }
      Fraction t = term();
      acc = first ? (negate ? Fraction{-t.num, t.den} : t) : add(acc, t, negate);
      first = false;
    }
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 't' || c == '(';
  }

  Fraction term() {
    Fraction acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        Fraction f = power();
        acc = {acc.num * f.num, acc.den * f.den};
      } else if (c == '/') {
        ++pos_;
        Fraction f = power();
        if (f.num.is_zero()) fail("division by zero");
        acc = {acc.num * f.den, acc.den * f.num};
      } else if (starts_factor(c)) {
        Fraction f = power();
        acc = {acc.num * f.num, acc.den * f.den};
      } else {
        return acc;
      }
    }
  }

  Fraction power() {
    Fraction b = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      b = {pow(b.num, static_cast<unsigned>(e)), pow(b.den, static_cast<unsigned>(e))};
    }
    return b;
  }

  Fraction atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Fraction f = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return f;
    }
    if (c == 'x') {
      ++pos_;
      return {BiPoly::x(), BiPoly::constant(1)};
    }
    if (c == 't') {
      ++pos_;
      return {BiPoly::t(), BiPoly::constant(1)};
    }
    if (c == '-' || c == '+') {
      ++pos_;
      Fraction f = power();
      return c == '-' ? Fraction{-f.num, f.den} : f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(std::string(s_.substr(start, pos_ - start)), 10);
      return {BiPoly::constant(Rational(v)), BiPoly::constant(1)};
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::pair<BiPoly, BiPoly> parse_fraction(std::string_view text) {
  Fraction f = Parser(text).parse_all();
  return {std::move(f.num), std::move(f.den)};
}

BiPoly parse_bipoly(std::string_view text) {
  auto [num, den] = parse_fraction(text);
  if (den.degree_x() > 0 || den.degree_t() > 0) {
    throw ParseError("not a polynomial: '" + std::string(text) + "'");
  }
  return num * (Rational(1) / den.coeff(0, 0));
}

UniPoly parse_unipoly(std::string_view text) {
  BiPoly p = parse_bipoly(text);
  if (!p.is_free_of_t()) throw ParseError("unexpected t in '" + std::string(text) + "'");
  return p.as_x_poly();
}

UniPoly parse_coefficient_list(std::string_view text) {
  std::vector<Rational> cs;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    cs.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return UniPoly(std::move(cs));
}

}  // namespace dyn
