#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyn/arith/unipoly.hpp"

namespace dyn {

// Polynomial over Z/pZ for a prime p < 2^32, coefficients lowest degree
// first, trimmed so the last one is nonzero.
struct ModPPoly {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  std::uint64_t leading() const { return c.empty() ? 0 : c.back(); }
  void trim();
  std::uint64_t operator()(std::uint64_t x) const;
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Reduction of f modulo p; empty when p divides some coefficient denominator.
std::optional<ModPPoly> reduce_mod(const UniPoly& f, std::uint64_t p);

ModPPoly mul(const ModPPoly& a, const ModPPoly& b);
ModPPoly sub(const ModPPoly& a, const ModPPoly& b);
ModPPoly rem(const ModPPoly& a, const ModPPoly& b);
ModPPoly quo(const ModPPoly& a, const ModPPoly& b);
ModPPoly derivative(const ModPPoly& a);
// Monic gcd.
ModPPoly gcd(ModPPoly a, ModPPoly b);
// base^e mod m, e given as an arbitrary-size integer.
ModPPoly powmod(const ModPPoly& base, const Integer& e, const ModPPoly& m);

bool is_squarefree(const ModPPoly& f);
// Degrees of the irreducible factors of a square-free f, ascending, found by
// distinct-degree factorization.
std::vector<int> factor_degrees(const ModPPoly& f);
// Roots in [0, p) by exhaustive evaluation, ascending.
std::vector<std::uint64_t> roots_by_search(const ModPPoly& f);

}  // namespace dyn
