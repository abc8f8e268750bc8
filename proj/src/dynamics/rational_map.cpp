#include "dyn/dynamics/rational_map.hpp"

#include <algorithm>

#include "dyn/arith/poly_text.hpp"
#include "dyn/errors.hpp"

namespace dyn {

const Rational& ProjPoint::value() const {
  if (!v_) throw InvalidArgument("point at infinity has no affine coordinate");
  return *v_;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
  return a.value() < b.value();
}

RationalMap::RationalMap(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize(true);
}

RationalMap::RationalMap(const UniPoly& num, const UniPoly& den)
    : RationalMap(BiPoly::in_x(num), BiPoly::in_x(den)) {}

RationalMap::RationalMap(BiPoly num, BiPoly den, Coprime) : num_(std::move(num)), den_(std::move(den)) {
  normalize(false);
}

RationalMap RationalMap::parse(std::string_view text) {
  auto [num, den] = parse_fraction(text);
  return RationalMap(std::move(num), std::move(den));
}

RationalMap RationalMap::identity() { return RationalMap(BiPoly::x(), BiPoly::constant(1), Coprime{}); }

void RationalMap::normalize(bool reduce_gcd) {
  if (den_.is_zero()) throw DegenerateMap("zero denominator");
  if (num_.is_zero()) throw DegenerateMap("constant map 0");
  if (reduce_gcd) {
    BiPoly g = gcd_x(num_, den_);
    if (g.degree_x() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  UniPoly c = poly_gcd(content_t(num_), content_t(den_));
  if (c.degree() > 0) {
    std::vector<UniPoly> a = num_.x_coeffs(), b = den_.x_coeffs();
    for (auto& v : a) v = exact_div(v, c);
    for (auto& v : b) v = exact_div(v, c);
    num_ = BiPoly::from_x_coeffs(a);
    den_ = BiPoly::from_x_coeffs(b);
  }
  // Joint integer normalisation.
  Integer l = 1, g = 0;
  for (const BiPoly* p : {&num_, &den_}) {
    for (auto& [k, v] : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  }
  for (const BiPoly* p : {&num_, &den_}) {
    for (auto& [k, v] : p->terms()) {
      Integer w = v.num() * (l / v.den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
    }
  }
  auto lead = std::max_element(den_.terms().begin(), den_.terms().end(), [](const auto& u, const auto& v) {
    return std::pair(u.first.second, u.first.first) < std::pair(v.first.second, v.first.first);
  });
  Rational scale(l, g);
  if (lead->second.sign() < 0) scale = -scale;
  num_ *= scale;
  den_ *= scale;
  base_ = (num_.degree_t() > 0 || den_.degree_t() > 0) ? Base::QT : Base::Q;
  if (degree() < 1) throw DegenerateMap("map of degree 0: " + str());
}

int RationalMap::degree() const { return std::max(num_.degree_x(), den_.degree_x()); }

UniPoly RationalMap::num_x() const {
  if (base_ != Base::Q) throw InvalidArgument("map is defined over Q(t)");
  return num_.as_x_poly();
}

UniPoly RationalMap::den_x() const {
  if (base_ != Base::Q) throw InvalidArgument("map is defined over Q(t)");
  return den_.as_x_poly();
}

RationalMap RationalMap::specialize(const Rational& v) const {
  UniPoly n = num_.specialize_t(v), d = den_.specialize_t(v);
  if (d.is_zero() || n.is_zero()) throw DegenerateMap("specialisation at t = " + v.str() + " is degenerate");
  return RationalMap(n, d);
}

ProjPoint RationalMap::operator()(const ProjPoint& p) const {
  UniPoly n = num_x(), d = den_x();
  if (p.is_infinity()) {
    if (n.degree() > d.degree()) return ProjPoint::infinity();
    if (n.degree() < d.degree()) return Rational(0);
    return n.leading() / d.leading();
  }
  Rational dv = d(p.value());
  if (dv.is_zero()) return ProjPoint::infinity();
  return n(p.value()) / dv;
}

std::string RationalMap::str() const { return "(" + to_string(num_) + ")/(" + to_string(den_) + ")"; }

namespace {

// F(p, q) = sum_i F_i p^i q^(d-i) for a polynomial F of formal degree d.
BiPoly homogeneous_eval(const BiPoly& f, int d, const BiPoly& p, const BiPoly& q) {
  std::vector<UniPoly> cs = f.x_coeffs();
  std::vector<BiPoly> qpow(static_cast<std::size_t>(d + 1));
  qpow[0] = BiPoly::constant(1);
  for (int i = 1; i <= d; ++i) qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] * q;
  BiPoly acc, ppow = BiPoly::constant(1);
  for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
    if (!cs[static_cast<std::size_t>(i)].is_zero()) {
      acc += BiPoly::in_t(cs[static_cast<std::size_t>(i)]) * ppow * qpow[static_cast<std::size_t>(d - i)];
    }
    ppow = ppow * p;
  }
  return acc;
}

}  // namespace

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  const int d = f.degree();
  BiPoly n = homogeneous_eval(f.num(), d, g.num(), g.den());
  BiPoly m = homogeneous_eval(f.den(), d, g.num(), g.den());
  // Homogeneous composition of coprime pairs stays coprime.
  return RationalMap(std::move(n), std::move(m), RationalMap::Coprime{});
}

RationalMap iterate(const RationalMap& f, int n) {
  if (n < 1) throw InvalidArgument("iterate needs n >= 1");
  RationalMap g = f;
  for (int i = 1; i < n; ++i) g = compose(f, g);
  return g;
}

RationalMap mobius_inverse(const RationalMap& m) {
  if (m.degree() != 1) throw InvalidArgument("not a degree-one map: " + m.str());
  // (a x + b)/(c x + d) -> (d x - b)/(-c x + a)
  auto coeff = [](const BiPoly& p, int i) { return BiPoly::in_t(i < static_cast<int>(p.x_coeffs().size()) ? p.x_coeffs()[static_cast<std::size_t>(i)] : UniPoly()); };
  BiPoly a = coeff(m.num(), 1), b = coeff(m.num(), 0), c = coeff(m.den(), 1), d = coeff(m.den(), 0);
  return RationalMap(d * BiPoly::x() - b, a - c * BiPoly::x());
}

RationalMap conjugate(const RationalMap& f, const RationalMap& m) {
  return compose(mobius_inverse(m), compose(f, m));
}

RationalMap phi_map(const Rational& v) {
  if (v.is_zero()) throw ExcludedParameter("phi_v is constant for v = 0");
  return RationalMap(BiPoly::constant(v) * (BiPoly::x() - BiPoly::constant(1)), BiPoly::x() * BiPoly::x());
}

RationalMap psi_map(const Rational& v) {
  if (v.is_zero() || v == Rational(4)) throw ExcludedParameter("psi_v has degree below 2 for v = " + v.str());
  return RationalMap(BiPoly::constant(2) * BiPoly::x() - BiPoly::constant(1),
                     BiPoly::constant(v) * BiPoly::x() * BiPoly::x() - BiPoly::constant(1));
}

RationalMap phi_generic() { return RationalMap::parse("t(x-1)/x^2"); }
RationalMap psi_generic() { return RationalMap::parse("(2x-1)/(t x^2-1)"); }

RationalMap psi_rs(const Rational& r, const Rational& s) {
  const BiPoly x = BiPoly::x();
  auto c = [](const Rational& v) { return BiPoly::constant(v); };
  BiPoly num = c(2) * x * x + c(2 - r) * x + c(2 - r);
  BiPoly den = c(-1) * x * x + c(2 + r) * x + c(2 - r - s);
  return RationalMap(std::move(num), std::move(den));
}

RationalMap psi_rs_generic_on_c2() {
  return RationalMap::parse("(2x^2 + (2-t)x + (2-t))/(-x^2 + (2+t)x + 2 + t)");
}

}  // namespace dyn
