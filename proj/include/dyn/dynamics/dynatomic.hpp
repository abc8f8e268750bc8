#pragma once

#include "dyn/arith/bipoly.hpp"
#include "dyn/dynamics/rational_map.hpp"

namespace dyn {

int mobius(int n);

// Phi_n = prod_{d | n} (x q_d - p_d)^mu(n/d), where f^d = p_d/q_d in lowest
// terms. Over Q the Moebius quotient of the raw factors is returned as is.
// Over Q(t) the quotient is taken in Q(t)[x] and scaled to a primitive
// element of Z[t][x] with positive leading term. Throws NonPolynomialQuotient
// if a division leaves a remainder.
BiPoly dynatomic(const RationalMap& f, int n);
// Same, for a map over Q.
UniPoly dynatomic_x(const RationalMap& f, int n);

}  // namespace dyn
