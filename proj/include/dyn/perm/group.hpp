#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "dyn/arith/rational.hpp"
#include "dyn/perm/permutation.hpp"

namespace dyn {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// A permutation group with its full element list materialised (sorted, so
// the identity comes first).
class PermGroup {
 public:
  static PermGroup trivial(int degree);
  // Takes a set already known to be a group; generators are chosen greedily.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  // Position of p in elements(), or order() when absent.
  std::size_t index_of(const Permutation& p) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.elements_ == b.elements_; }

 private:
  friend PermGroup generate(int, const std::vector<Permutation>&, std::size_t);
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// Closure of a non-empty generator list; throws ClosureCapExceeded when the
// group would exceed cap elements.
PermGroup generate(const std::vector<Permutation>& gens, std::size_t cap = kDefaultClosureCap);
// Same on an explicit degree, allowing an empty list.
PermGroup generate(int degree, const std::vector<Permutation>& gens, std::size_t cap = kDefaultClosureCap);

using CycleTypeDistribution = std::map<Partition, long>;

CycleTypeDistribution cycle_type_distribution(const PermGroup& g);
// Proportion of elements with at least one fixed point.
Rational root_density(const PermGroup& g);
// Orbit sizes, i.e. the indices of the point stabilisers.
std::set<int> point_degrees(const PermGroup& g);
std::vector<std::vector<int>> orbits(const PermGroup& g);  // 0-based points
std::map<int, long> element_order_histogram(const PermGroup& g);
bool has_shape(const PermGroup& g, const Partition& shape);

PermGroup center(const PermGroup& g);
PermGroup derived_subgroup(const PermGroup& g);
// Invariants of G/[G,G] as prime powers in increasing order; [] when perfect.
std::vector<long> abelian_invariants(const PermGroup& g);
bool is_abelian(const PermGroup& g);
bool is_cyclic(const PermGroup& g);

// x^-1 H x
PermGroup conjugate(const PermGroup& h, const Permutation& x);
// Whether some G-conjugate of H lies in K.
bool contained_up_to_conjugacy(const PermGroup& h, const PermGroup& k, const PermGroup& g);
bool conjugate_in(const PermGroup& h, const PermGroup& k, const PermGroup& g);

}  // namespace dyn
