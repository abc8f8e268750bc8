#pragma once

#include <optional>
#include <vector>

#include "dyn/dynamics/rational_map.hpp"

namespace dyn {

struct OrbitRecord {
  // Distinct points in visiting order, starting with the initial point.
  std::vector<ProjPoint> points;
  // Index in points where the cycle starts, and the cycle length; both empty
  // when no repetition was seen within max_steps.
  std::optional<int> preperiod;
  std::optional<int> period;
  bool exceeded() const { return !period.has_value(); }
};

OrbitRecord orbit(const RationalMap& f, const ProjPoint& start, int max_steps = 1000);

// Exact period of P under f, if P is periodic with period <= max_steps.
std::optional<int> exact_period(const RationalMap& f, const ProjPoint& p, int max_steps = 1000);

// p'q - pq' for f = p/q over Q.
UniPoly wronskian(const RationalMap& f);
bool infinity_is_critical(const RationalMap& f);

// Whether f (over Q) has a critical point of exact period n. Finite critical
// points are handled by gcd(Wronskian, Phi_n); infinity by its orbit.
// Throws InseparableDynatomic when disc Phi_n = 0.
bool has_n_periodic_critical_point(const RationalMap& f, int n);

}  // namespace dyn
