#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyn/classify/parametrization.hpp"
#include "dyn/classify/resolvent.hpp"
#include "dyn/dynamics/normal_form.hpp"
#include "dyn/galois/frobenius.hpp"

namespace dyn {

enum class Status { Certified, CandidateSet, Heuristic };
std::string to_string(Status s);  // "certified" | "candidate-set" | "heuristic"

struct MembershipTest {
  std::string parametrization;
  bool member = false;
  std::optional<Rational> preimage;
};

struct ResolventTest {
  std::string label;
  ResolventOutcome outcome;
};

struct ClassifyOptions {
  std::size_t prime_budget = kDefaultPrimeBudget;
  std::uint64_t prime_bound = kDefaultPrimeBound;
  // Run Frobenius identification on candidate sets and heuristic cases.
  bool identify = true;
};

struct ClassificationResult {
  Family family = Family::NoAuto;
  int n = 0;
  Rational v;
  Status status = Status::Certified;
  // The group (certified), the surviving alternatives (candidate-set), or
  // the best match (heuristic).
  std::vector<std::string> labels;
  std::optional<std::string> best;
  std::string branch;  // which case of the decision tree fired
  std::vector<MembershipTest> memberships;
  std::vector<ResolventTest> resolvents;
  std::optional<IdentificationReport> identification;
  std::vector<std::string> notes;
};

// The decision trees for G_{n,v}, n in {3, 4}. Throws ExcludedParameter
// outside the family's parameter range.
ClassificationResult classify(Family f, int n, const Rational& v, const ClassifyOptions& opts = {});

}  // namespace dyn
