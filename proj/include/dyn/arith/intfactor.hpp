#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dyn/arith/rational.hpp"

namespace dyn {

// Budget for factoring an integer: trial division up to trial_bound, then
// Pollard-Brent rho with at most rho_iterations total iterations.
struct FactorEffort {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 2'000'000;
};

// Process-wide default, initialised from DYN_FACTOR_EFFORT (rho iterations)
// when that variable holds a positive integer.
FactorEffort default_factor_effort();
// Overrides the rho budget of the default (and the environment); 0 clears.
void set_default_rho_iterations(std::uint64_t iterations);

// Prime factorization of |n| (n != 0) as sorted (prime, exponent) pairs.
// Throws IntegerFactorizationEffortExceeded naming n when the budget runs out.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n,
                                                         const FactorEffort& effort = default_factor_effort());

// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n, const FactorEffort& effort = default_factor_effort());

bool is_probable_prime(const Integer& n);

}  // namespace dyn
