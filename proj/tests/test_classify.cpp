#include <gtest/gtest.h>

#include <random>

#include "dyn/arith/poly_text.hpp"
#include "dyn/classify/applications.hpp"
#include "dyn/classify/classify.hpp"
#include "dyn/classify/families.hpp"
#include "dyn/classify/groups.hpp"
#include "dyn/classify/parametrization.hpp"
#include "dyn/classify/resolvent.hpp"
#include "dyn/dynamics/dynatomic.hpp"
#include "dyn/errors.hpp"
#include "dyn/galois/frobenius.hpp"

using namespace dyn;

namespace {

Rational random_rational(std::mt19937& rng, long height) {
  std::uniform_int_distribution<long> num(-height, height), den(1, height);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

const ResolventEntry& entry(Family f, int n, const std::string& label) {
  for (const ResolventEntry* e : resolvent_entries(f, n))
    if (e->label == label) return *e;
  throw std::logic_error("missing entry");
}

std::vector<Rational> small_params() {
  std::vector<Rational> out;
  for (int a = -4; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b) out.emplace_back(Integer(a), Integer(b));
  return out;
}

}  // namespace

TEST(Catalog, StoredPhi3MatchesComputed) {
  EXPECT_EQ(stored_phi3(Family::NoAuto), dynatomic(phi_generic(), 3));
  EXPECT_EQ(stored_phi3(Family::Auto), dynatomic(psi_generic(), 3));
  EXPECT_EQ(generic_dynatomic_degree(Family::NoAuto, 3), 6);
  EXPECT_EQ(generic_dynatomic_degree(Family::Auto, 4), 12);
}

TEST(Catalog, ProjectiveDynatomicKeepsFullDegree) {
  // At v = 1 the auto map has the 3-cycle infinity -> 0 -> 1.
  EXPECT_EQ(dynatomic_x(psi_map(1), 3).degree(), 5);
  UniPoly p = projective_dynatomic(Family::Auto, 3, Rational(1));
  EXPECT_EQ(p.degree(), 6);
  EXPECT_FALSE(discriminant(p).is_zero());
  EXPECT_EQ(projective_dynatomic(Family::NoAuto, 3, Rational(7)), dynatomic_x(phi_map(7), 3));
  EXPECT_THROW(projective_dynatomic(Family::Auto, 3, Rational(4)), ExcludedParameter);
}

TEST(Parametrization, Examples) {
  const auto& eta = parametrization(ParamId::Eta);
  EXPECT_EQ(evaluate(eta, Rational(2)), std::optional<Rational>(Rational(9, 2)));
  auto pre = image_preimage(eta, Rational(9, 2));
  ASSERT_TRUE(pre);
  EXPECT_EQ(evaluate(eta, *pre), std::optional<Rational>(Rational(9, 2)));
  EXPECT_FALSE(evaluate(eta, Rational(1)));
  EXPECT_EQ(evaluate(parametrization(ParamId::Kappa), Rational(1)), std::optional<Rational>(Rational(3)));
  EXPECT_FALSE(image_contains(parametrization(ParamId::Alpha4), Rational(4)));
  EXPECT_TRUE(image_contains(parametrization(ParamId::Beta3), Rational(2)));
  EXPECT_TRUE(image_contains(parametrization(ParamId::Alpha3), Rational(0)));
  EXPECT_TRUE(image_contains(parametrization(ParamId::Alpha3), Rational(1)));
  EXPECT_EQ(parametrization_from_name("mu4"), ParamId::Mu4);
}

TEST(Parametrization, CompositesAgreeWithDirectEvaluation) {
  auto a3 = [](const Rational& t) { return pow(Rational(1) + t, 2) / (Rational(1) - t + t * t); };
  auto a4 = [](const Rational& t) { return Rational(4) * t * t / (t * t + Rational(3)); };
  auto b4 = [](const Rational& t) { return Rational(4) * t * t / (t * t + Rational(15)); };
  for (const Rational& t : small_params()) {
    Rational m_den = pow(t, 3) + Rational(3) * t * t - Rational(1);
    if (!m_den.is_zero()) {
      Rational m = (pow(t, 3) - Rational(3) * t - Rational(1)) / m_den;
      if (!(Rational(1) - m + m * m).is_zero()) {
        EXPECT_EQ(evaluate(parametrization(ParamId::Mu3), t), std::optional<Rational>(a3(m))) << t;
      }
    }
    Rational i_den = (Rational(2) * t - Rational(1)) * (t * t - t - Rational(11));
    if (!i_den.is_zero()) {
      Rational i = Rational(45) * (Rational(1) + t - t * t) / i_den;
      EXPECT_EQ(evaluate(parametrization(ParamId::Iota), t), std::optional<Rational>(b4(i))) << t;
    }
    Rational u_den = (t - Rational(1)) * (Rational(2) + t) * (Rational(2) * t + Rational(1));
    if (!u_den.is_zero()) {
      Rational u = Rational(9) * t * (t + Rational(1)) / u_den;
      EXPECT_EQ(evaluate(parametrization(ParamId::Mu4), t), std::optional<Rational>(a4(u))) << t;
    }
  }
}

TEST(Resolvent, Examples) {
  ResolventOutcome c = resolvent_root_test(entry(Family::NoAuto, 3, "C"), Rational(9, 2));
  EXPECT_EQ(c.verdict, ResolventVerdict::Contained);
  EXPECT_NE(std::find(c.roots.begin(), c.roots.end(), Rational(-27)), c.roots.end());
  EXPECT_EQ(resolvent_root_test(entry(Family::NoAuto, 3, "A"), Rational(7)).verdict, ResolventVerdict::NotContained);
  EXPECT_EQ(resolvent_root_test(entry(Family::NoAuto, 3, "B"), Rational(3)).verdict, ResolventVerdict::Inconclusive);
}

TEST(Resolvent, BadValuesAreTheExcludedOnes) {
  std::set<Rational> no_auto, auto3, auto4;
  for (const auto* e : resolvent_entries(Family::NoAuto, 3)) no_auto.insert(e->bad_values.begin(), e->bad_values.end());
  for (const auto* e : resolvent_entries(Family::Auto, 3)) auto3.insert(e->bad_values.begin(), e->bad_values.end());
  for (const auto* e : resolvent_entries(Family::Auto, 4)) auto4.insert(e->bad_values.begin(), e->bad_values.end());
  EXPECT_EQ(no_auto, (std::set<Rational>{Rational(0), Rational(3)}));
  for (const auto& v : auto3) EXPECT_TRUE(v == Rational(0) || v == Rational(1) || v == Rational(4)) << v;
  for (const auto& v : auto4) EXPECT_TRUE(v == Rational(0) || v == Rational(3, 2) || v == Rational(4)) << v;
}

TEST(Resolvent, ParametrizedPointsGiveRationalRoots) {
  // Each parametrization lands on the curve of its resolvent.
  struct Case {
    ParamId p;
    Family f;
    int n;
    const char* label;
  };
  for (const Case& c : {Case{ParamId::Eta, Family::NoAuto, 3, "C"}, Case{ParamId::Alpha3, Family::Auto, 3, "A"},
                        Case{ParamId::Beta3, Family::Auto, 3, "B"}, Case{ParamId::Alpha4, Family::Auto, 4, "A"},
                        Case{ParamId::Beta4, Family::Auto, 4, "B"}}) {
    const ResolventEntry& e = entry(c.f, c.n, c.label);
    for (const Rational& t : small_params()) {
      auto v = evaluate(parametrization(c.p), t);
      if (!v) continue;
      const auto excluded = excluded_parameters(c.f);
      if (std::find(excluded.begin(), excluded.end(), *v) != excluded.end()) continue;
      ResolventOutcome o = resolvent_root_test(e, *v);
      EXPECT_NE(o.verdict, ResolventVerdict::NotContained) << parametrization(c.p).name << " at " << t;
    }
  }
}

TEST(Groups, LabelsAndSets) {
  const GroupCatalog& n3 = group_catalog(Family::NoAuto, 3);
  EXPECT_EQ(n3.group("W").order(), 18u);
  EXPECT_EQ(n3.group("A").order(), 9u);
  EXPECT_EQ(n3.group("C").order(), 6u);
  const GroupCatalog& a3 = group_catalog(Family::Auto, 3);
  for (const char* l : {"J", "K", "M"}) EXPECT_EQ(a3.group(l).order(), 3u);
  EXPECT_TRUE(is_cyclic(a3.group("B")));
  const GroupCatalog& a4 = group_catalog(Family::Auto, 4);
  EXPECT_EQ(a4.group("V").order(), 24u);
  EXPECT_TRUE(is_cyclic(a4.group("A")));
  EXPECT_EQ(a4.group("D").order(), 8u);
  EXPECT_NE(a4.class_index("M"), a4.class_index("I"));
  EXPECT_EQ(cycle_type_distribution(a4.group("M")), cycle_type_distribution(a4.group("I")));

  const GroupCatalog& g = group_catalog(Family::NoAuto, 4);
  EXPECT_EQ(g.lattice().size(), 164u);
  EXPECT_EQ(g.label_set("F").size(), 11u);
  EXPECT_EQ(g.label_set("R").size(), 10u);
  EXPECT_EQ(g.label_set("U").size(), 16u);
  EXPECT_EQ(g.label_set("P").size(), 26u);
  std::multiset<std::size_t> orders;
  for (auto c : g.lattice().maximal_subclasses(g.lattice().size() - 1)) orders.insert(g.lattice().order(c));
  EXPECT_EQ(orders, (std::multiset<std::size_t>{96, 128, 192, 192, 192}));
  for (const char* l : {"A1", "C1"}) EXPECT_EQ(g.group(l).order(), std::string(l) == "A1" ? 48u : 24u);
  // A2 is a Sylow 2-subgroup of M1, hence maximal in a conjugate of M2: the
  // same class as B7.
  EXPECT_EQ(g.class_index("A2"), g.class_index("B7"));
  EXPECT_EQ(g.labels_of(g.class_index("A2")), (std::vector<std::string>{"A2", "B7"}));
  EXPECT_NE(g.class_index("B1"), g.class_index("B7"));
  EXPECT_THROW(g.class_index("Z9"), InvalidArgument);
}

TEST(Classify, Examples) {
  ClassificationResult c = classify(Family::NoAuto, 3, Rational(9, 2));
  EXPECT_EQ(c.status, Status::Certified);
  EXPECT_EQ(c.labels, (std::vector<std::string>{"C"}));
  ClassificationResult k = classify(Family::Auto, 3, Rational(3));
  EXPECT_EQ(k.status, Status::Certified);
  EXPECT_EQ(k.labels, (std::vector<std::string>{"K"}));
  ClassificationResult a1 = classify(Family::NoAuto, 4, Rational(25, 6));
  EXPECT_EQ(a1.status, Status::CandidateSet);
  EXPECT_EQ(a1.best, std::optional<std::string>("A1"));
  EXPECT_THROW(classify(Family::Auto, 3, Rational(4)), ExcludedParameter);
  EXPECT_THROW(classify(Family::NoAuto, 4, Rational(0)), ExcludedParameter);
  EXPECT_THROW(classify(Family::NoAuto, 5, Rational(2)), InvalidArgument);
}

TEST(Classify, HeuristicCases) {
  ClassificationResult g33 = classify(Family::NoAuto, 3, Rational(3));
  EXPECT_EQ(g33.status, Status::Heuristic);
  EXPECT_EQ(g33.best, std::optional<std::string>("B"));
  EXPECT_FALSE(g33.notes.empty());
  EXPECT_EQ(classify(Family::Auto, 3, Rational(1)).status, Status::Heuristic);
  EXPECT_EQ(classify(Family::Auto, 4, Rational(3, 2)).status, Status::Heuristic);
  EXPECT_EQ(classify(Family::NoAuto, 4, Rational(8, 3)).best, std::optional<std::string>("K"));
}

TEST(Classify, AutoBranches) {
  // mu3 and iota / mu4 images take precedence over the candidate-set branches.
  Rational v = *evaluate(parametrization(ParamId::Mu3), Rational(2));
  EXPECT_EQ(classify(Family::Auto, 3, v).labels, (std::vector<std::string>{"M"}));
  Rational w = *evaluate(parametrization(ParamId::Iota), Rational(2));
  EXPECT_EQ(classify(Family::Auto, 4, w).labels, (std::vector<std::string>{"I"}));
  EXPECT_EQ(classify(Family::Auto, 3, Rational(7)).labels, (std::vector<std::string>{"W"}));
  ClassificationResult a = classify(Family::Auto, 3, *evaluate(parametrization(ParamId::Alpha3), Rational(5)));
  EXPECT_EQ(a.status, Status::CandidateSet);
  for (const auto& l : a.labels) EXPECT_TRUE(l == "A" || l == "K" || l == "M");
  ClassificationResult d = classify(Family::Auto, 4, *evaluate(parametrization(ParamId::Delta), Rational(3)));
  EXPECT_EQ(d.status, Status::CandidateSet);
  for (const auto& l : d.labels) EXPECT_TRUE(l == "D" || l == "I");
}

TEST(Classify, EtaBranchesExclusiveAndExhaustive) {
  std::mt19937 rng(11);
  const auto& eta = parametrization(ParamId::Eta);
  ClassifyOptions quick;
  quick.identify = false;
  int in_image = 0;
  for (int i = 0; i < 10000; ++i) {
    Rational v = random_rational(rng, 50);
    if (v.is_zero() || v == Rational(3)) continue;
    ClassificationResult c = classify(Family::NoAuto, 3, v, quick);
    ASSERT_EQ(c.status, Status::Certified);
    bool member = image_contains(eta, v);
    in_image += member;
    EXPECT_EQ(c.labels.front(), member ? "C" : "W") << v;
  }
  EXPECT_GE(in_image, 0);
}

TEST(Classify, CertifiedSupportSoundness) {
  std::mt19937 rng(3);
  const GroupCatalog& cat = group_catalog(Family::NoAuto, 3);
  const auto& eta = parametrization(ParamId::Eta);
  for (int i = 0; i < 6; ++i) {
    Rational a = random_rational(rng, 20);
    if (a.is_zero() || a == Rational(1)) continue;
    for (const Rational& v : {*evaluate(eta, a), a + Rational(7, 3)}) {
      if (v.is_zero() || v == Rational(3)) continue;
      ClassificationResult c = classify(Family::NoAuto, 3, v);
      ASSERT_EQ(c.status, Status::Certified);
      CycleTypeDistribution support = cycle_type_distribution(cat.group(c.labels.front()));
      FrobeniusSample s = frobenius_sample(projective_dynatomic(Family::NoAuto, 3, v), 300);
      for (const auto& [t, k] : s.counts) EXPECT_TRUE(support.count(t)) << v << " " << to_string(t);
    }
  }
}

TEST(Classify, InvariantUnderConjugation) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int i = 0; i < 6; ++i) {
    Rational v(Integer(i + 2), Integer(i % 3 + 1));
    RationalMap m = RationalMap::parse("x");
    do {
      int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
      if (a * e - b * c == 0) continue;
      m = RationalMap(UniPoly({Rational(b), Rational(a)}), UniPoly({Rational(e), Rational(c)}));
      break;
    } while (true);
    auto nf = normal_form(conjugate(phi_map(v), m));
    ASSERT_TRUE(nf);
    EXPECT_EQ(classify(nf->family, 3, nf->v).labels, classify(Family::NoAuto, 3, v).labels);
  }
}

TEST(Applications, DegreesAndDensities) {
  EXPECT_EQ(periodic_point_degrees(Family::NoAuto, 3, Rational(9, 2)), (std::set<int>{6}));
  EXPECT_EQ(periodic_point_degrees(Family::NoAuto, 3, Rational(7)), (std::set<int>{6}));
  for (const auto& d : periodic_point_degrees(Family::NoAuto, 4, Rational(2)))
    EXPECT_TRUE(d == 2 || d == 4 || d == 6 || d == 8 || d == 12);
  EXPECT_EQ(padic_density(Family::NoAuto, 3, Rational(7)).no_root_density, Rational(13, 18));
  EXPECT_EQ(padic_density(Family::NoAuto, 3, Rational(9, 2)).no_root_density, Rational(5, 6));
  // Without sampling the candidate set is all of P and only a bound is known.
  ClassifyOptions quick;
  quick.identify = false;
  DensityResult p = padic_density(Family::NoAuto, 4, Rational(2), quick);
  EXPECT_TRUE(p.lower_bound);
  EXPECT_EQ(p.root_densities.size(), 26u);
  EXPECT_EQ(p.no_root_density, Rational(3, 8));
  // Sampling eliminates everything but G at v = 2.
  DensityResult g = padic_density(Family::NoAuto, 4, Rational(2));
  EXPECT_FALSE(g.lower_bound);
  EXPECT_GE(g.no_root_density, Rational(3, 8));
}

TEST(Applications, RationalPeriodicScan) {
  auto scan = rational_periodic_scan(Family::NoAuto, Rational(2), 6);
  ASSERT_EQ(scan.size(), 6u);
  EXPECT_TRUE(scan[0].points.empty());
  EXPECT_EQ(scan[1].points, (std::vector<ProjPoint>{Rational(0), ProjPoint::infinity()}));
  for (int n = 3; n <= 6; ++n) EXPECT_TRUE(scan[static_cast<std::size_t>(n - 1)].points.empty()) << n;
  // psi_1 has the rational 3-cycle infinity -> 0 -> 1.
  auto fixed = rational_periodic_scan(Family::Auto, Rational(1), 3);
  EXPECT_EQ(fixed[2].points.size(), 3u);
  EXPECT_THROW(rational_periodic_scan(Family::NoAuto, Rational(2), 7), InvalidArgument);
}
