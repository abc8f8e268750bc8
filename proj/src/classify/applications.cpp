#include "dyn/classify/applications.hpp"

#include <algorithm>

#include "dyn/arith/roots.hpp"
#include "dyn/classify/families.hpp"
#include "dyn/classify/groups.hpp"
#include "dyn/dynamics/dynatomic.hpp"
#include "dyn/dynamics/orbit.hpp"
#include "dyn/errors.hpp"

namespace dyn {

std::set<int> periodic_point_degrees(const ClassificationResult& c) {
  const GroupCatalog& cat = group_catalog(c.family, c.n);
  std::set<int> out;
  for (const auto& l : c.labels) {
    auto d = point_degrees(cat.group(l));
    out.insert(d.begin(), d.end());
  }
  return out;
}

std::set<int> periodic_point_degrees(Family f, int n, const Rational& v, const ClassifyOptions& opts) {
  return periodic_point_degrees(classify(f, n, v, opts));
}

DensityResult padic_density(const ClassificationResult& c) {
  const GroupCatalog& cat = group_catalog(c.family, c.n);
  DensityResult out;
  out.lower_bound = c.status == Status::CandidateSet && c.labels.size() > 1;
  bool first = true;
  for (const auto& l : c.labels) {
    Rational rd = root_density(cat.group(l));
    out.root_densities[l] = rd;
    Rational none = Rational(1) - rd;
    if (first || none < out.no_root_density) out.no_root_density = none;
    first = false;
  }
  if (first) throw InvalidArgument("classification produced no group");
  return out;
}

DensityResult padic_density(Family f, int n, const Rational& v, const ClassifyOptions& opts) {
  return padic_density(classify(f, n, v, opts));
}

std::vector<PeriodicScanEntry> rational_periodic_scan(Family f, const Rational& v, int n_max) {
  if (n_max < 1 || n_max > 6) throw InvalidArgument("scan supports 1 <= n <= 6");
  check_parameter(f, v);
  RationalMap g = family_map(f, v);
  std::vector<PeriodicScanEntry> out;
  for (int n = 1; n <= n_max; ++n) {
    PeriodicScanEntry e;
    e.n = n;
    UniPoly phi = dynatomic_x(g, n);
    if (phi.degree() >= 1)
      for (const Rational& r : rational_roots(phi))
        if (exact_period(g, r, n) == std::optional<int>(n)) e.points.emplace_back(r);
    if (exact_period(g, ProjPoint::infinity(), n) == std::optional<int>(n)) e.points.push_back(ProjPoint::infinity());
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace dyn
