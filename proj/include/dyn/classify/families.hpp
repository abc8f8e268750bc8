#pragma once

#include <vector>

#include "dyn/arith/bipoly.hpp"
#include "dyn/arith/unipoly.hpp"
#include "dyn/dynamics/normal_form.hpp"

namespace dyn {

// Parameters where the family member is not a quadratic map: {0} for
// no-auto, {0, 4} for auto.
std::vector<Rational> excluded_parameters(Family f);
// Throws ExcludedParameter for excluded v.
void check_parameter(Family f, const Rational& v);

// The third dynatomic polynomials of the generic maps, stored as printed.
const BiPoly& stored_phi3(Family f);

// Degree in x of the generic Phi_n, i.e. the number of points of period n.
int generic_dynatomic_degree(Family f, int n);

// Phi_n(v, x) with every n-periodic point made finite: when some of them sit
// at infinity (the specialised polynomial loses degree) the roots are moved
// by x -> c + 1/y for the least integer c >= 0 that is not a root. The
// Galois action on the roots is unchanged.
UniPoly projective_dynatomic(Family f, int n, const Rational& v);

}  // namespace dyn
