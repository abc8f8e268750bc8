#include "dyn/galois/frobenius.hpp"

#include <cmath>
#include <set>

#include "dyn/arith/intfactor.hpp"
#include "dyn/errors.hpp"
#include "dyn/galois/modp.hpp"

namespace dyn {

FrobeniusSample frobenius_sample(const UniPoly& f, std::size_t prime_budget, std::uint64_t prime_bound) {
  if (f.degree() < 1) throw InvalidArgument("need a non-constant polynomial");
  if (discriminant(f).is_zero()) throw InvalidArgument("polynomial is not separable: " + to_string(f));
  if (prime_bound > (std::uint64_t{1} << 32)) throw InvalidArgument("prime bound above 2^32");
  FrobeniusSample s;
  for (std::uint64_t p = 3; p < prime_bound && s.good < prime_budget; p += 2) {
    if (!is_probable_prime(Integer(static_cast<unsigned long>(p)))) continue;
    auto t = cycle_type_mod_p(f, p);
    if (!t) {
      ++s.bad;
      continue;
    }
    ++s.counts[*t];
    ++s.good;
  }
  if (s.good < prime_budget)
    throw InsufficientGoodPrimes("only " + std::to_string(s.good) + " good primes below " +
                                 std::to_string(prime_bound) + ", wanted " + std::to_string(prime_budget));
  return s;
}

std::string to_string(CandidateStatus s) {
  return s == CandidateStatus::EliminatedCertain ? "eliminated-certain" : "consistent";
}

double l1_distance(const FrobeniusSample& s, const CycleTypeDistribution& exact, std::size_t group_order) {
  std::set<Partition> types;
  for (const auto& [k, v] : s.counts) types.insert(k);
  for (const auto& [k, v] : exact) types.insert(k);
  double d = 0;
  for (const Partition& t : types) {
    auto a = s.counts.find(t);
    auto b = exact.find(t);
    double ea = a == s.counts.end() ? 0.0 : static_cast<double>(a->second) / static_cast<double>(s.good);
    double eb = b == exact.end() ? 0.0 : static_cast<double>(b->second) / static_cast<double>(group_order);
    d += std::fabs(ea - eb);
  }
  return d;
}

IdentificationReport identify(const UniPoly& f, const std::vector<LabeledGroup>& candidates,
                              std::size_t prime_budget, std::uint64_t prime_bound) {
  for (const auto& [label, g] : candidates)
    if (g.degree() != f.degree())
      throw InvalidArgument("candidate " + label + " acts on " + std::to_string(g.degree()) + " points, polynomial has degree " +
                            std::to_string(f.degree()));
  IdentificationReport r;
  r.sample = frobenius_sample(f, prime_budget, prime_bound);
  const CandidateVerdict* best = nullptr;
  std::size_t consistent = 0;
  for (const auto& [label, g] : candidates) {
    CandidateVerdict v;
    v.label = label;
    v.order = g.order();
    CycleTypeDistribution exact = cycle_type_distribution(g);
    for (const auto& [t, c] : r.sample.counts)
      if (!exact.count(t)) {
        v.status = CandidateStatus::EliminatedCertain;
        v.witness = t;
        break;
      }
    v.l1 = l1_distance(r.sample, exact, g.order());
    r.candidates.push_back(std::move(v));
  }
  for (const CandidateVerdict& v : r.candidates) {
    if (v.status != CandidateStatus::Consistent) continue;
    ++consistent;
    if (!best || v.l1 < best->l1 - 1e-12 ||
        (std::fabs(v.l1 - best->l1) <= 1e-12 && (v.order < best->order || (v.order == best->order && v.label < best->label))))
      best = &v;
  }
  if (best) r.best = best->label;
  if (consistent == 0)
    r.note = "every candidate was eliminated";
  else if (consistent == 1)
    r.note = "one candidate consistent with all observed cycle types";
  else
    r.note = std::to_string(consistent) +
             " candidates consistent; best by L1 distance. Sampling cannot exclude subgroups of the true group";
  return r;
}

}  // namespace dyn
