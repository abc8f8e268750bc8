#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dyn/classify/classify.hpp"
#include "dyn/dynamics/rational_map.hpp"

namespace dyn {

// Degrees of the n-periodic points of the family member: orbit sizes of the
// classified group, or their union over a candidate set.
std::set<int> periodic_point_degrees(const ClassificationResult& c);
std::set<int> periodic_point_degrees(Family f, int n, const Rational& v, const ClassifyOptions& opts = {});

struct DensityResult {
  // Density of primes p with no n-periodic point over Q_p. For candidate
  // sets this is the minimum over the candidates, hence a lower bound.
  Rational no_root_density;
  bool lower_bound = false;
  std::map<std::string, Rational> root_densities;  // per candidate group
};

DensityResult padic_density(const ClassificationResult& c);
DensityResult padic_density(Family f, int n, const Rational& v, const ClassifyOptions& opts = {});

struct PeriodicScanEntry {
  int n = 0;
  std::vector<ProjPoint> points;  // rational points of exact period n, infinity last
};

// Rational points of exact period n for n = 1..n_max (n_max <= 6).
std::vector<PeriodicScanEntry> rational_periodic_scan(Family f, const Rational& v, int n_max = 6);

}  // namespace dyn
