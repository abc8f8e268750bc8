#include "dyn/classify/resolvent.hpp"

#include <algorithm>

#include "dyn/arith/poly_text.hpp"
#include "dyn/arith/roots.hpp"

namespace dyn {

namespace {

ResolventEntry entry(Family f, int n, const char* label, const BiPoly& q) {
  ResolventEntry e{f, n, label, q, {}};
  UniPoly gate = q.leading_x() * discriminant_x(q);
  e.bad_values = rational_roots(gate);
  return e;
}

std::vector<ResolventEntry> build() {
  std::vector<ResolventEntry> out;
  // Fixed fields of the maximal subgroups for the no-auto family, n = 3.
  out.push_back(entry(Family::NoAuto, 3, "A",
                      parse_bipoly("x^2 + (2t^2 - 6t + 12)x + t^4 - 6t^3 + 24t^2 - 36t + 36")));
  out.push_back(entry(Family::NoAuto, 3, "B",
                      parse_bipoly("x^3 + (8t^2 - 18t)x^2 + (20t^4 - 84t^3 + 72t^2)x + 16t^6 - 96t^5 + "
                                   "168t^4 - 144t^3 + 216t^2")));
  out.push_back(entry(Family::NoAuto, 3, "C",
                      parse_bipoly("x^3 + (8t^2 - 18t)x^2 + (20t^4 - 84t^3 + 72t^2)x + 16t^6 - 96t^5 + "
                                   "160t^4 - 72t^3")));
  // Auto family, n = 3: only q_A and q_B are printed.
  out.push_back(entry(Family::Auto, 3, "A", parse_bipoly("x^2 + 9t^3 x + 27t^6 - 27t^5")));
  out.push_back(entry(Family::Auto, 3, "B",
                      parse_bipoly("x^3 + (-18t^7 + 117t^6 + 144t^5)x^2 + (-324t^13 - 729t^12 + 15552t^11 + "
                                   "5184t^10)x + 216t^22 - 3240t^21 + 18792t^20 - 54378t^19 + 59859t^18 - "
                                   "16848t^17 + 527040t^16")));
  // Auto family, n = 4.
  BiPoly tail = parse_bipoly("(t^2 - 3t + 1)(t^3 - 2t^2 + 18t - 54)");
  BiPoly f_a = parse_bipoly("3t^16 (t - 4)") * tail;
  BiPoly f_b = parse_bipoly("9t^22 (t - 4)^2") * tail;
  BiPoly x2 = parse_bipoly("x^2");
  out.push_back(entry(Family::Auto, 4, "A", x2 - parse_bipoly("3t(4 - t)") * f_a * f_a));
  out.push_back(entry(Family::Auto, 4, "B", x2 - parse_bipoly("15t(4 - t)") * f_b * f_b));
  out.push_back(entry(Family::Auto, 4, "C", parse_bipoly("x^2 + (15t^7 - 30t^6)x + 45t^14 - 135t^13 + 45t^12")));
  return out;
}

}  // namespace

const std::vector<ResolventEntry>& resolvent_entries() {
  static const std::vector<ResolventEntry> table = build();
  return table;
}

std::vector<const ResolventEntry*> resolvent_entries(Family f, int n) {
  std::vector<const ResolventEntry*> out;
  for (const ResolventEntry& e : resolvent_entries())
    if (e.family == f && e.n == n) out.push_back(&e);
  return out;
}

std::string to_string(ResolventVerdict r) {
  switch (r) {
    case ResolventVerdict::Contained:
      return "contained";
    case ResolventVerdict::NotContained:
      return "not-contained";
    case ResolventVerdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ResolventOutcome resolvent_root_test(const ResolventEntry& e, const Rational& v) {
  if (std::find(e.bad_values.begin(), e.bad_values.end(), v) != e.bad_values.end())
    return {ResolventVerdict::Inconclusive, {}};
  auto roots = rational_roots(e.q.specialize_t(v));
  ResolventVerdict verdict = roots.empty() ? ResolventVerdict::NotContained : ResolventVerdict::Contained;
  return {verdict, std::move(roots)};
}

}  // namespace dyn
