#include "dyn/dynamics/milnor.hpp"

#include "dyn/arith/bipoly.hpp"
#include "dyn/errors.hpp"

namespace dyn {

namespace {

RationalMap move_infinity_off_fixed_set(const RationalMap& f) {
  if (f(ProjPoint::infinity()) != ProjPoint::infinity()) return f;
  for (long c = 0;; ++c) {
    if (f(Rational(c)) == ProjPoint(Rational(c))) continue;
    // sigma(x) = c + 1/x sends infinity to c.
    RationalMap sigma(BiPoly::constant(c) * BiPoly::x() + BiPoly::constant(1), BiPoly::x());
    return conjugate(f, sigma);
  }
}

}  // namespace

UniPoly fixed_point_multiplier_polynomial(const RationalMap& f_in) {
  if (f_in.base() != Base::Q) throw InvalidArgument("Milnor coordinates need a map over Q");
  if (f_in.degree() != 2) throw DegenerateMap("Milnor coordinates need a quadratic map, got degree " +
                                              std::to_string(f_in.degree()));
  RationalMap f = move_infinity_off_fixed_set(f_in);
  UniPoly p = f.num_x(), q = f.den_x();
  UniPoly fixed = p - UniPoly::x() * q;
  UniPoly n = derivative(p) * q - p * derivative(q);
  UniPoly d = q * q;
  // The auxiliary variable y plays the role of t in BiPoly.
  BiPoly lhs = BiPoly::in_x(fixed);
  BiPoly rhs = BiPoly::t() * BiPoly::in_x(d) - BiPoly::in_x(n);
  return monic(resultant_x(lhs, rhs));
}

MilnorPoint milnor_coordinates(const RationalMap& f) {
  UniPoly r = fixed_point_multiplier_polynomial(f);
  if (r.degree() != 3) throw DegenerateMap("unexpected multiplier polynomial degree");
  return {-r.coeff(2), r.coeff(1)};
}

bool on_curve(const MilnorPoint& p, Curve c) {
  const Rational& r = p.r;
  const Rational& s = p.s;
  switch (c) {
    case Curve::C1:
      return r == Rational(2);
    case Curve::C2:
      return s == Rational(-2) * r;
    case Curve::Symmetry:
      return (Rational(-2) * r * r * r - r * r * s + r * r + Rational(8) * r * s + Rational(4) * s * s -
              Rational(12) * r - Rational(12) * s + Rational(36))
          .is_zero();
  }
  return false;
}

}  // namespace dyn
