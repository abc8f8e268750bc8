#include <gtest/gtest.h>

#include "dyn/arith/poly_text.hpp"
#include "dyn/dynamics/dynatomic.hpp"
#include "dyn/dynamics/rational_map.hpp"
#include "dyn/errors.hpp"
#include "dyn/galois/frobenius.hpp"
#include "dyn/galois/modp.hpp"

using namespace dyn;

namespace {

UniPoly P(const char* s) { return parse_unipoly(s); }

PermGroup G(std::initializer_list<const char*> gens, int n) {
  std::vector<Permutation> v;
  for (const char* s : gens) v.push_back(Permutation::parse(s, n));
  return generate(n, v);
}

std::vector<LabeledGroup> n3_groups() {
  return {{"W", G({"(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"}, 6)},
          {"A", G({"(1,2,3)", "(1,2,3)(4,5,6)"}, 6)},
          {"B", G({"(1,5,2,6,3,4)", "(1,2,3)(4,5,6)"}, 6)},
          {"C", G({"(1,6)(2,4)(3,5)", "(1,2,3)(4,6,5)"}, 6)}};
}

}  // namespace

TEST(CycleTypeModP, Examples) {
  EXPECT_EQ(cycle_type_mod_p(P("x^2+1"), 5), (Partition{1, 1}));
  EXPECT_EQ(cycle_type_mod_p(P("x^2+1"), 3), (Partition{2}));
  EXPECT_EQ(cycle_type_mod_p(P("x^3-x"), 5), (Partition{1, 1, 1}));
}

TEST(CycleTypeModP, BadPrimes) {
  EXPECT_FALSE(cycle_type_mod_p(P("x^2 + 1/3"), 3));
  EXPECT_FALSE(cycle_type_mod_p(P("5x^2 + 1"), 5));
  EXPECT_FALSE(cycle_type_mod_p(P("x^2 - 5"), 5));
  EXPECT_TRUE(cycle_type_mod_p(P("x^2 - 5"), 7));
  EXPECT_THROW(cycle_type_mod_p(P("x^2+1"), 4), InvalidArgument);
}

TEST(CycleTypeModP, PartitionSumsToDegree) {
  UniPoly f = dynatomic_x(phi_map(2), 4);
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 101, 9973}) {
    auto t = cycle_type_mod_p(f, p);
    if (!t) continue;
    int sum = 0;
    for (int k : *t) sum += k;
    EXPECT_EQ(sum, 12);
  }
}

TEST(FrobeniusSample, Examples) {
  FrobeniusSample split = frobenius_sample(P("(x-1)(x-2)(x-3)"), 50);
  EXPECT_EQ(split.counts, (CycleTypeDistribution{{{1, 1, 1}, 50}}));

  PermGroup c = n3_groups()[3].second;
  CycleTypeDistribution support = cycle_type_distribution(c);
  FrobeniusSample s = frobenius_sample(dynatomic_x(phi_map(Rational(9, 2)), 3), 300);
  EXPECT_EQ(s.good, 300u);
  for (const auto& [t, n] : s.counts) EXPECT_TRUE(support.count(t)) << to_string(t);

  FrobeniusSample w = frobenius_sample(dynatomic_x(phi_map(2), 3), 300);
  EXPECT_TRUE(w.counts.count({3, 1, 1, 1}) || w.counts.count({6}));
}

TEST(FrobeniusSample, DeterministicAndBounded) {
  UniPoly f = dynatomic_x(phi_map(7), 3);
  FrobeniusSample a = frobenius_sample(f, 120), b = frobenius_sample(f, 120);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.bad, b.bad);
  EXPECT_THROW(frobenius_sample(f, 300, 100), InsufficientGoodPrimes);
  EXPECT_THROW(frobenius_sample(P("(x-1)^2"), 10), InvalidArgument);
}

TEST(Identify, Phi3AtEtaValue) {
  IdentificationReport r = identify(dynatomic_x(phi_map(Rational(9, 2)), 3), n3_groups());
  ASSERT_EQ(r.candidates.size(), 4u);
  EXPECT_EQ(r.candidates[1].status, CandidateStatus::EliminatedCertain);
  // B is cyclic of order 6; its support {1^6, 6, 3^2, 2^3} contains that of C,
  // so no Frobenius element can rule it out. It loses on distance instead.
  EXPECT_EQ(r.candidates[2].status, CandidateStatus::Consistent);
  EXPECT_GT(r.candidates[2].l1, r.candidates[3].l1);
  EXPECT_EQ(r.candidates[3].status, CandidateStatus::Consistent);
  EXPECT_EQ(r.candidates[0].status, CandidateStatus::Consistent);
  EXPECT_GT(r.candidates[0].l1, r.candidates[3].l1);
  EXPECT_EQ(r.best, std::optional<std::string>("C"));
  EXPECT_LT(r.candidates[3].l1, 0.15);
}

TEST(Identify, GenericValueMatchesW) {
  IdentificationReport r = identify(dynatomic_x(phi_map(2), 3), n3_groups());
  EXPECT_EQ(r.best, std::optional<std::string>("W"));
  EXPECT_EQ(r.candidates[3].status, CandidateStatus::EliminatedCertain);
}

TEST(Identify, SplitPolynomialPrefersTrivialGroup) {
  std::vector<LabeledGroup> cands = n3_groups();
  cands.push_back({"1", PermGroup::trivial(6)});
  IdentificationReport r = identify(P("(x-1)(x-2)(x-3)(x+1)(x+2)(x+5)"), cands, 100);
  EXPECT_EQ(r.best, std::optional<std::string>("1"));
  for (const auto& v : r.candidates) EXPECT_EQ(v.status, CandidateStatus::Consistent);
  EXPECT_THROW(identify(P("x^2+1"), cands, 10), InvalidArgument);
}
