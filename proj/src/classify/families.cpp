#include "dyn/classify/families.hpp"

#include <algorithm>

#include "dyn/arith/poly_text.hpp"
#include "dyn/dynamics/dynatomic.hpp"
#include "dyn/errors.hpp"

namespace dyn {

std::vector<Rational> excluded_parameters(Family f) {
  if (f == Family::NoAuto) return {Rational(0)};
  return {Rational(0), Rational(4)};
}

void check_parameter(Family f, const Rational& v) {
  auto ex = excluded_parameters(f);
  if (std::find(ex.begin(), ex.end(), v) != ex.end())
    throw ExcludedParameter("v = " + v.str() + " is excluded for the " + to_string(f) + " family");
}

const BiPoly& stored_phi3(Family f) {
  static const BiPoly no_auto =
      parse_bipoly("x^6 - 2t x^5 + (t^2 + 3t)x^4 + (-3t^2 - t)x^3 + 4t^2 x^2 - 3t^2 x + t^2");
  static const BiPoly with_auto = parse_bipoly(
      "(t^4 - t^3)x^6 - 9t^3 x^5 + (3t^3 + 33t^2)x^4 + (-t^3 - 26t^2)x^3 + (18t^2 - 27t)x^2 + "
      "(-6t^2 + 15t)x + t^2 - 4t + 3");
  return f == Family::NoAuto ? no_auto : with_auto;
}

int generic_dynatomic_degree(Family, int n) {
  // Every quadratic map has sum_{d | n} mu(n/d) (2^d + 1) points of period n.
  int total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) total += mobius(n / d) * ((1 << d) + 1);
  return total;
}

UniPoly projective_dynatomic(Family f, int n, const Rational& v) {
  check_parameter(f, v);
  UniPoly phi = dynatomic_x(family_map(f, v), n);
  const int full = generic_dynatomic_degree(f, n);
  if (phi.degree() == full) return phi;
  long c = 0;
  while (phi(Rational(c)).is_zero()) ++c;
  // y^full * phi(c + 1/y) = sum_i a_i (c y + 1)^i y^(full - i)
  UniPoly shifted = compose(phi, UniPoly::x() + UniPoly::constant(Rational(c)));
  UniPoly out;
  for (int i = 0; i <= shifted.degree(); ++i)
    out = out + UniPoly::monomial(shifted.coeff(i), full - i);
  return out;
}

}  // namespace dyn
