#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dyn/arith/rational.hpp"
#include "dyn/arith/unipoly.hpp"

namespace dyn {

// Sparse polynomial in (t, x) over Q. Keys are (t-degree, x-degree); zero
// coefficients are never stored. Most algorithms view it as an element of
// Q[t][x], i.e. a polynomial in x whose coefficients are UniPolys in t.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  explicit BiPoly(std::map<Key, Rational> terms);

  static BiPoly constant(const Rational& c);
  static BiPoly t() { return term(1, 1, 0); }
  static BiPoly x() { return term(1, 0, 1); }
  static BiPoly term(const Rational& c, int t_deg, int x_deg);
  // Embeds a univariate polynomial as a polynomial in x (or in t).
  static BiPoly in_x(const UniPoly& p);
  static BiPoly in_t(const UniPoly& p);
  // sum_i c[i](t) x^i
  static BiPoly from_x_coeffs(const std::vector<UniPoly>& c);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_x() const;  // -1 for zero
  int degree_t() const;  // -1 for zero
  Rational coeff(int t_deg, int x_deg) const;

  // Coefficients of x^0 .. x^deg_x as polynomials in t.
  std::vector<UniPoly> x_coeffs() const;
  UniPoly leading_x() const;
  bool is_free_of_t() const { return degree_t() <= 0; }

  // P(v, x)
  UniPoly specialize_t(const Rational& v) const;
  // P(t, v)
  UniPoly specialize_x(const Rational& v) const;
  // Restriction to a polynomial in x when no t occurs; throws otherwise.
  UniPoly as_x_poly() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  BiPoly operator-() const;
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void add_term(const Key& k, const Rational& c);
  std::map<Key, Rational> terms_;
};

BiPoly pow(const BiPoly& p, unsigned exponent);
BiPoly derivative_x(const BiPoly& p);
// p(t, q(t, x))
BiPoly compose_x(const BiPoly& p, const BiPoly& q);

// Exact quotient in Q[t][x]; throws NonPolynomialQuotient on failure.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
// lc_x(b)^k a = q b + r with deg_x r < deg_x b and k = max(deg_x a - deg_x b + 1, 0).
struct PseudoDivision {
  BiPoly quotient;
  BiPoly remainder;
};
PseudoDivision pseudo_divmod(const BiPoly& a, const BiPoly& b);

// Monic gcd (over Q) of the x-coefficients, as a polynomial in t.
UniPoly content_t(const BiPoly& p);
// p divided by its t-content and scaled to integer coefficients with gcd 1
// and positive leading coefficient (highest x-degree, then highest t-degree).
BiPoly primitive_part(const BiPoly& p);
// gcd in Q(t)[x], normalized as primitive_part.
BiPoly gcd_x(const BiPoly& a, const BiPoly& b);

// Res_x(a, b) as a polynomial in t, by evaluation at integer points and
// interpolation.
UniPoly resultant_x(const BiPoly& a, const BiPoly& b);
// (-1)^{d(d-1)/2} Res_x(p, dp/dx) / lc_x(p), exact in Q[t].
UniPoly discriminant_x(const BiPoly& p);

// Newton interpolation through (xs[i], ys[i]) with distinct xs.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// e.g. "x^6 - 2*t*x^5 + (t^2 + 3*t)*x^4 ..."
std::string to_string(const BiPoly& p);

}  // namespace dyn
