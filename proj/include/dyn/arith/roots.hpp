#pragma once

#include <vector>

#include "dyn/arith/intfactor.hpp"
#include "dyn/arith/unipoly.hpp"

namespace dyn {

// Every rational root of p (p != 0), ascending, without multiplicity.
//
// Roots are found p-adically: the square-free primitive part is reduced
// modulo a small prime l of good reduction, its roots mod l are Hensel-lifted
// past twice the constant coefficient, and each lift is paired with every
// positive divisor q of the leading coefficient to recover a numerator. Only
// the leading coefficient is factored, so the effort error names it.
std::vector<Rational> rational_roots(const UniPoly& p, const FactorEffort& effort = default_factor_effort());

}  // namespace dyn
