#pragma once

#include <map>
#include <vector>

#include "dyn/perm/group.hpp"

namespace dyn {

// Isomorphism-and-embedding invariants used to attach names to subgroup
// classes. Two conjugate subgroups always share a fingerprint.
struct GroupFingerprint {
  std::size_t order = 0;
  CycleTypeDistribution cycle_types;
  std::vector<long> abelian_invariants;
  std::size_t center_order = 0;
  std::map<int, long> element_orders;
  bool cyclic = false;

  bool has_shape(const Partition& p) const { return cycle_types.count(p) > 0; }
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const PermGroup& h);

}  // namespace dyn
