#include "dyn/dynamics/normal_form.hpp"

#include "dyn/errors.hpp"

namespace dyn {

std::string to_string(Family f) { return f == Family::NoAuto ? "no-auto" : "auto"; }

Family family_from_string(const std::string& s) {
  if (s == "no-auto") return Family::NoAuto;
  if (s == "auto") return Family::Auto;
  throw InvalidArgument("unknown family '" + s + "' (expected no-auto or auto)");
}

RationalMap family_map(Family f, const Rational& v) { return f == Family::NoAuto ? phi_map(v) : psi_map(v); }
RationalMap family_generic(Family f) { return f == Family::NoAuto ? phi_generic() : psi_generic(); }

namespace {

const RationalMap& c2_sigma() {
  static const RationalMap s = RationalMap::parse("(2-x)/(x-1)");
  return s;
}

// Degree-one map sending infinity, 0, 1 to the distinct points a, b, c.
RationalMap mobius_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  auto X = BiPoly::x();
  auto k = [](const Rational& v) { return BiPoly::constant(v); };
  if (a.is_infinity()) {
    // m(x) = b + (c - b) x
    return RationalMap(k(b.value()) + k(c.value() - b.value()) * X, k(1));
  }
  if (b.is_infinity()) {
    // m(x) = a + (c - a)/x
    return RationalMap(k(a.value()) * X + k(c.value() - a.value()), X);
  }
  if (c.is_infinity()) {
    // m(x) = (a x - b)/(x - 1)
    return RationalMap(k(a.value()) * X - k(b.value()), X - k(1));
  }
  // General: m(x) = (a (c - b) x + b (a - c)) / ((c - b) x + (a - c)).
  const Rational &av = a.value(), &bv = b.value(), &cv = c.value();
  return RationalMap(k(av * (cv - bv)) * X + k(bv * (av - cv)), k(cv - bv) * X + k(av - cv));
}

std::optional<NormalForm> auto_form(const RationalMap& f, const MilnorPoint& mp) {
  // Base points infinity, 0, 1, -1, 2, -2, ...
  for (long i = -1; i < 200; ++i) {
    ProjPoint a = i < 0 ? ProjPoint::infinity() : ProjPoint(i == 0 ? Rational(0) : (i % 2 ? Rational((i + 1) / 2) : Rational(-i / 2)));
    ProjPoint b = f(a), c = f(b);
    if (a == b || b == c || a == c) continue;
    RationalMap m = mobius_through(a, b, c);
    RationalMap g = conjugate(f, m);
    UniPoly num = g.num_x(), den = g.den_x();
    // g(inf) = 0 and g(0) = 1 force deg num <= 1 < deg den = 2, den(0) = num(0).
    if (den.degree() != 2 || num.degree() > 1) continue;
    num = num * (Rational(1) / den.leading());
    den = monic(den);
    const Rational& bcoef = num.coeff(0);
    if (bcoef.is_zero() || den.coeff(0) != bcoef) continue;
    if (num.coeff(1) != Rational(-2) * bcoef || !den.coeff(1).is_zero()) {
      throw InvalidArgument("multiplier spectrum is not {-2,-2,-2} for " + f.str());
    }
    return NormalForm{Family::Auto, Rational(-1) / bcoef, mp, true};
  }
  return std::nullopt;
}

}  // namespace

std::optional<NormalForm> normal_form(const RationalMap& f) {
  MilnorPoint mp = milnor_coordinates(f);
  if (!on_curve(mp, Curve::C2)) {
    throw NotOnC2("Milnor point (" + mp.r.str() + ", " + mp.s.str() + ") is off s = -2r");
  }
  if (mp.r == Rational(-6)) return auto_form(f, mp);
  Rational v = mp.r + 6;
  NormalForm nf{Family::NoAuto, v, mp, false};
  if (f == phi_map(v)) {
    nf.conjugation_verified = true;
  } else if (f == psi_rs(mp.r, mp.s)) {
    nf.conjugation_verified = conjugate(f, c2_sigma()) == phi_map(v);
  }
  return nf;
}

}  // namespace dyn
