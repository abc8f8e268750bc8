#include "dyn/galois/modp.hpp"

#include <algorithm>

#include "dyn/arith/modp_poly.hpp"
#include "dyn/errors.hpp"

namespace dyn {

std::optional<Partition> cycle_type_mod_p(const UniPoly& f, std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 32)) throw InvalidArgument("need an odd prime below 2^32");
  if (f.degree() < 1) throw InvalidArgument("need a non-constant polynomial");
  auto r = reduce_mod(f, p);
  if (!r || r->degree() != f.degree() || !is_squarefree(*r)) return std::nullopt;
  Partition out = factor_degrees(*r);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace dyn
