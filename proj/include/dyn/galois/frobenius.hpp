#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyn/arith/unipoly.hpp"
#include "dyn/perm/group.hpp"

namespace dyn {

inline constexpr std::size_t kDefaultPrimeBudget = 300;
inline constexpr std::uint64_t kDefaultPrimeBound = 10000;

struct FrobeniusSample {
  std::size_t good = 0;  // primes that contributed
  std::size_t bad = 0;   // primes skipped below the last good one
  CycleTypeDistribution counts;
};

// Cycle types at the first prime_budget good odd primes below prime_bound,
// in increasing order. Throws InsufficientGoodPrimes when there are fewer.
FrobeniusSample frobenius_sample(const UniPoly& f, std::size_t prime_budget = kDefaultPrimeBudget,
                                 std::uint64_t prime_bound = kDefaultPrimeBound);

enum class CandidateStatus { EliminatedCertain, Consistent };
std::string to_string(CandidateStatus s);  // "eliminated-certain" | "consistent"

struct CandidateVerdict {
  std::string label;
  std::size_t order = 0;
  CandidateStatus status = CandidateStatus::Consistent;
  double l1 = 0;                      // distance between empirical and exact frequencies
  std::optional<Partition> witness;  // an observed type outside the support
};

struct IdentificationReport {
  FrobeniusSample sample;
  std::vector<CandidateVerdict> candidates;  // in input order
  std::optional<std::string> best;
  std::string note;
};

using LabeledGroup = std::pair<std::string, PermGroup>;

// Eliminates candidates whose cycle-type support misses an observed type and
// ranks the rest by L1 distance (ties: smaller order, then label). Subgroups
// of the true group can never be eliminated this way, so the best match is
// advisory whenever consistent candidates nest.
IdentificationReport identify(const UniPoly& f, const std::vector<LabeledGroup>& candidates,
                              std::size_t prime_budget = kDefaultPrimeBudget,
                              std::uint64_t prime_bound = kDefaultPrimeBound);

double l1_distance(const FrobeniusSample& s, const CycleTypeDistribution& exact, std::size_t group_order);

}  // namespace dyn
