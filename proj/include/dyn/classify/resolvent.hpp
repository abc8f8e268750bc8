#pragma once

#include <string>
#include <vector>

#include "dyn/arith/bipoly.hpp"
#include "dyn/dynamics/normal_form.hpp"

namespace dyn {

// A defining polynomial q_H(t, x) for the fixed field of a labelled subgroup
// H, as printed, with the parameters where its specialisations say nothing:
// rational roots of lc_x(q_H) * disc_x(q_H).
struct ResolventEntry {
  Family family;
  int n;
  std::string label;
  BiPoly q;
  std::vector<Rational> bad_values;
};

const std::vector<ResolventEntry>& resolvent_entries();
// The entries for one family and n (possibly none).
std::vector<const ResolventEntry*> resolvent_entries(Family f, int n);

enum class ResolventVerdict { Contained, NotContained, Inconclusive };
std::string to_string(ResolventVerdict r);  // "contained" | "not-contained" | "inconclusive"

struct ResolventOutcome {
  ResolventVerdict verdict;
  std::vector<Rational> roots;  // rational roots of q_H(v, x) when conclusive
};

// A rational root of q_H(v, x) means the specialised group lies in a
// conjugate of H; none means it does not. Inconclusive on bad values.
ResolventOutcome resolvent_root_test(const ResolventEntry& e, const Rational& v);

}  // namespace dyn
