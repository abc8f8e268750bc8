#pragma once

#include <cstdint>
#include <optional>

#include "dyn/arith/unipoly.hpp"
#include "dyn/perm/permutation.hpp"

namespace dyn {

// Factor-degree pattern of f modulo an odd prime p, i.e. the cycle type of
// Frobenius. Empty (a bad prime) when p divides a coefficient denominator or
// the leading coefficient, or when the reduction is not square-free.
std::optional<Partition> cycle_type_mod_p(const UniPoly& f, std::uint64_t p);

}  // namespace dyn
