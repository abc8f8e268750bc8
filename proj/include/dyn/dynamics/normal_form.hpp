#pragma once

#include <optional>
#include <string>

#include "dyn/dynamics/milnor.hpp"
#include "dyn/dynamics/rational_map.hpp"

namespace dyn {

enum class Family { NoAuto, Auto };

std::string to_string(Family f);
Family family_from_string(const std::string& s);  // "no-auto" | "auto"
RationalMap family_map(Family f, const Rational& v);
RationalMap family_generic(Family f);

struct NormalForm {
  Family family;
  Rational v;
  MilnorPoint milnor;
  // True when an explicit conjugation to the family member was constructed
  // and checked, rather than inferred from the Milnor point alone.
  bool conjugation_verified = false;
};

// Places a quadratic map over Q with a 2-periodic critical point in one of the
// two families. Off the point (-6, 12) the automorphism group is trivial and
// v = r + 6; the conjugation by (2 - x)/(x - 1) is verified when f has the
// shape psi_{r,-2r} or phi_v. At (-6, 12) the map is moved so that infinity
// goes to 0 and 0 goes to 1, which forces the shape (ax + b)/(x^2 + cx + b);
// then a = -2b, c = 0 and v = -1/b. Returns nullopt (not in scope) if no
// suitable rational base point is found. Throws NotOnC2 off the curve.
std::optional<NormalForm> normal_form(const RationalMap& f);

}  // namespace dyn
