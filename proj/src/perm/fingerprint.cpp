#include "dyn/perm/fingerprint.hpp"

namespace dyn {

GroupFingerprint fingerprint(const PermGroup& h) {
  GroupFingerprint f;
  f.order = h.order();
  f.cycle_types = cycle_type_distribution(h);
  f.abelian_invariants = abelian_invariants(h);
  f.center_order = center(h).order();
  f.element_orders = element_order_histogram(h);
  f.cyclic = f.element_orders.count(static_cast<int>(f.order)) > 0;
  return f;
}

}  // namespace dyn
