#include "dyn/dynamics/dynatomic.hpp"

#include <map>

#include "dyn/errors.hpp"

namespace dyn {

int mobius(int n) {
  if (n < 1) throw InvalidArgument("mobius needs n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

BiPoly dynatomic(const RationalMap& f, int n) {
  if (n < 1) throw InvalidArgument("dynatomic needs n >= 1");
  BiPoly up = BiPoly::constant(1), down = BiPoly::constant(1);
  RationalMap g = f;
  for (int d = 1; d <= n; ++d) {
    if (d > 1) g = compose(f, g);
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    BiPoly factor = BiPoly::x() * g.den() - g.num();
    if (factor.is_zero()) throw DegenerateMap("every point is " + std::to_string(d) + "-periodic");
    (mu > 0 ? up : down) = (mu > 0 ? up : down) * factor;
  }
  if (f.base() == Base::Q) return exact_div(up, down);
  return primitive_part(exact_div(primitive_part(up), primitive_part(down)));
}

UniPoly dynatomic_x(const RationalMap& f, int n) {
  if (f.base() != Base::Q) throw InvalidArgument("dynatomic_x needs a map over Q");
  return dynatomic(f, n).as_x_poly();
}

}  // namespace dyn
