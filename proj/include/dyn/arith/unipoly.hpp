#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dyn/arith/rational.hpp"

namespace dyn {

// Dense univariate polynomial over Q, coefficients stored lowest degree first.
// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs)
      : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }
  // prod (x - r) over the given roots.
  static UniPoly from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::span<const Rational> coeffs() const { return c_; }
  const Rational& coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly derivative(const UniPoly& p);
UniPoly pow(const UniPoly& p, unsigned exponent);
// p(q(x))
UniPoly compose(const UniPoly& p, const UniPoly& q);

// Euclidean division over Q; throws on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Quotient of an exact division; throws NonPolynomialQuotient on a remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

UniPoly monic(const UniPoly& p);
// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
Rational resultant(const UniPoly& a, const UniPoly& b);
// (-1)^{d(d-1)/2} Res(p, p') / lc(p); rejects constants.
Rational discriminant(const UniPoly& p);

// Integer coefficient vector with gcd 1 and positive leading coefficient,
// proportional to p. Empty for p = 0.
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p);
UniPoly primitive_part(const UniPoly& p);
// p(x) with x^k removed for the largest k dividing p.
UniPoly strip_zero_roots(const UniPoly& p, int* removed = nullptr);
UniPoly squarefree_part(const UniPoly& p);

// Human readable, highest degree first, e.g. "2*x^3 - 3*x + 1/2".
std::string to_string(const UniPoly& p, char var = 'x');

}  // namespace dyn
