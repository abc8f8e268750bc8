#include "dyn/dynamics/orbit.hpp"

#include <map>

#include "dyn/dynamics/dynatomic.hpp"
#include "dyn/errors.hpp"

namespace dyn {

OrbitRecord orbit(const RationalMap& f, const ProjPoint& start, int max_steps) {
  OrbitRecord rec;
  std::map<ProjPoint, int> seen;
  ProjPoint p = start;
  for (int i = 0; i <= max_steps; ++i) {
    auto it = seen.find(p);
    if (it != seen.end()) {
      rec.preperiod = it->second;
      rec.period = i - it->second;
      return rec;
    }
    seen.emplace(p, i);
    rec.points.push_back(p);
    p = f(p);
  }
  return rec;
}

std::optional<int> exact_period(const RationalMap& f, const ProjPoint& p, int max_steps) {
  OrbitRecord rec = orbit(f, p, max_steps);
  if (rec.exceeded() || *rec.preperiod != 0) return std::nullopt;
  return rec.period;
}

UniPoly wronskian(const RationalMap& f) {
  UniPoly p = f.num_x(), q = f.den_x();
  return derivative(p) * q - p * derivative(q);
}

bool infinity_is_critical(const RationalMap& f) {
  return wronskian(f).degree() < 2 * f.degree() - 2;
}

bool has_n_periodic_critical_point(const RationalMap& f, int n) {
  UniPoly phi = dynatomic_x(f, n);
  if (phi.degree() >= 1 && discriminant(phi).is_zero()) {
    throw InseparableDynatomic("Phi_" + std::to_string(n) + " of " + f.str() + " has a repeated root");
  }
  if (phi.degree() >= 1 && poly_gcd(wronskian(f), phi).degree() > 0) return true;
  if (!infinity_is_critical(f)) return false;
  auto period = exact_period(f, ProjPoint::infinity(), n);
  return period && *period == n;
}

}  // namespace dyn
