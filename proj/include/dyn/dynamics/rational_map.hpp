#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dyn/arith/bipoly.hpp"
#include "dyn/arith/rational.hpp"

namespace dyn {

enum class Base { Q, QT };

// A point of P^1(Q): a rational value or infinity.
class ProjPoint {
 public:
  ProjPoint(const Rational& v) : v_(v) {}  // NOLINT: finite points convert implicitly
  static ProjPoint infinity() { return ProjPoint(); }

  bool is_infinity() const { return !v_.has_value(); }
  const Rational& value() const;  // throws on infinity
  std::string str() const { return v_ ? v_->str() : "infinity"; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  ProjPoint() = default;
  std::optional<Rational> v_;
};

// f = num/den in lowest terms, over Q (no t) or over Q(t). The pair is
// normalised jointly: no common factor in Q(t)[x], no common t-content,
// integer coefficients with gcd 1, and the leading term of den positive.
class RationalMap {
 public:
  RationalMap(BiPoly num, BiPoly den);
  RationalMap(const UniPoly& num, const UniPoly& den);

  // "P/Q" in x (and t for maps over Q(t)).
  static RationalMap parse(std::string_view text);
  static RationalMap identity();

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  Base base() const { return base_; }
  int degree() const;

  // Numerator and denominator as polynomials in x; requires base Q.
  UniPoly num_x() const;
  UniPoly den_x() const;

  // f with t replaced by v; throws DegenerateMap if that collapses the degree
  // below one.
  RationalMap specialize(const Rational& v) const;
  ProjPoint operator()(const ProjPoint& p) const;  // base Q only

  std::string str() const;
  friend bool operator==(const RationalMap&, const RationalMap&) = default;

  struct Coprime {};
  // Skips the gcd step; the caller guarantees num and den are coprime.
  RationalMap(BiPoly num, BiPoly den, Coprime);

 private:
  void normalize(bool reduce_gcd);
  BiPoly num_, den_;
  Base base_ = Base::Q;
};

// f(g(x))
RationalMap compose(const RationalMap& f, const RationalMap& g);
RationalMap iterate(const RationalMap& f, int n);
// m^{-1} o f o m for a degree-one m.
RationalMap conjugate(const RationalMap& f, const RationalMap& m);
RationalMap mobius_inverse(const RationalMap& m);

// The two families: phi_v = v(x-1)/x^2 and psi_v = (2x-1)/(v x^2 - 1),
// specialised at v or generic (v = t).
RationalMap phi_map(const Rational& v);
RationalMap psi_map(const Rational& v);
RationalMap phi_generic();
RationalMap psi_generic();
// (2x^2 + (2-r)x + (2-r)) / (-x^2 + (2+r)x + 2 - r - s)
RationalMap psi_rs(const Rational& r, const Rational& s);
// The same map with r = t and s = -2t.
RationalMap psi_rs_generic_on_c2();

}  // namespace dyn
