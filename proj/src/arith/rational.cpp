#include "dyn/arith/rational.hpp"

#include <cctype>
#include <ostream>

#include "dyn/errors.hpp"

namespace dyn {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer integer_from(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw InvalidArgument("zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_text(s)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(integer_from(s));
  }
  std::string_view n = trim(s.substr(0, slash));
  std::string_view d = trim(s.substr(slash + 1));
  if (!valid_integer_text(n) || !valid_integer_text(d)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer den = integer_from(d);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(integer_from(n), den);
}

Integer Rational::height() const {
  Integer n = abs(q_.get_num());
  Integer d = q_.get_den();
  return n > d ? n : d;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(n, d);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dyn
