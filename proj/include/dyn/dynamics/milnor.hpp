#pragma once

#include "dyn/arith/rational.hpp"
#include "dyn/dynamics/rational_map.hpp"

namespace dyn {

struct MilnorPoint {
  Rational r;
  Rational s;
  friend bool operator==(const MilnorPoint&, const MilnorPoint&) = default;
};

enum class Curve { C1, C2, Symmetry };

// First and second elementary symmetric functions of the three fixed-point
// multipliers of a quadratic map over Q, read off the characteristic
// polynomial Res_x(p - x q, y q^2 - (p'q - pq')). When infinity is fixed the
// map is first conjugated by x -> c + 1/x with the least c >= 0 for which
// c is not fixed. Throws DegenerateMap unless deg f = 2.
MilnorPoint milnor_coordinates(const RationalMap& f);

// The multiplier characteristic polynomial itself (monic in y), after the
// same conjugation.
UniPoly fixed_point_multiplier_polynomial(const RationalMap& f);

bool on_curve(const MilnorPoint& p, Curve c);

}  // namespace dyn
