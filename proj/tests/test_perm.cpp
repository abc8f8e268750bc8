#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dyn/errors.hpp"
#include "dyn/perm/fingerprint.hpp"
#include "dyn/perm/group.hpp"
#include "dyn/perm/lattice.hpp"
#include "oracles.hpp"

using namespace dyn;

namespace {

Permutation P(const char* s, int n) { return Permutation::parse(s, n); }

PermGroup G(std::initializer_list<const char*> gens, int n) {
  std::vector<Permutation> v;
  for (const char* s : gens) v.push_back(P(s, n));
  return generate(n, v);
}

PermGroup w3() { return G({"(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"}, 6); }
PermGroup wreath4() { return G({"(1,2,3,4)", "(1,5,9)(2,6,10)(3,7,11)(4,8,12)", "(1,5)(2,6)(3,7)(4,8)"}, 12); }

}  // namespace

TEST(Permutation, ParsesAndMultipliesLeftToRight) {
  Permutation a = P("(1,2,3)", 3), b = P("(1,2)", 3);
  // a first, then b: 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2.
  EXPECT_EQ((a * b).str(), "(2,3)");
  EXPECT_EQ((b * a).str(), "(1,3)");
  EXPECT_EQ(a.order(), 3);
  EXPECT_EQ(P("(1,5,2,6,3,4)", 6).cycle_type(), (Partition{6}));
  EXPECT_EQ(P("()", 4).cycle_type(), (Partition{1, 1, 1, 1}));
  EXPECT_EQ(a.inverse() * a, Permutation::identity(3));
  EXPECT_EQ(P("(1,2,3,4)", 4).pow(-1), P("(1,4,3,2)", 4));
  EXPECT_THROW(P("(1,2)(2,3)", 3), ParseError);
  EXPECT_THROW(P("(1,5)", 3), ParseError);
  EXPECT_THROW(Permutation(std::vector<int>{1, 1}), InvalidArgument);
  EXPECT_EQ(parse_partition("[4,1^8]"), (Partition{4, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(to_string(parse_partition("2,3,1")), "[3,2,1]");
}

TEST(PermGroup, GenerateExamples) {
  EXPECT_EQ(w3().order(), 18u);
  EXPECT_EQ(generate({Permutation::identity(6)}).order(), 1u);
  EXPECT_EQ(wreath4().order(), 384u);
  EXPECT_EQ(PermGroup::trivial(5).order(), 1u);
  EXPECT_THROW(generate({P("(1,2)", 8), P("(1,2,3,4,5,6,7,8)", 8)}, 1000), ClosureCapExceeded);
}

TEST(PermGroup, OrderStableUnderReorderingAndDividesFactorial) {
  std::vector<Permutation> gens = {P("(1,2,3,4)", 12), P("(1,5,9)(2,6,10)(3,7,11)(4,8,12)", 12),
                                   P("(1,5)(2,6)(3,7)(4,8)", 12)};
  std::sort(gens.begin(), gens.end());
  do {
    EXPECT_EQ(generate(gens).order(), 384u);
  } while (std::next_permutation(gens.begin(), gens.end()));
  long fact6 = 720;
  EXPECT_EQ(fact6 % static_cast<long>(w3().order()), 0);
}

TEST(PermGroup, CycleTypeDistributionExamples) {
  CycleTypeDistribution w = cycle_type_distribution(w3());
  CycleTypeDistribution expect = {{{1, 1, 1, 1, 1, 1}, 1}, {{3, 1, 1, 1}, 4}, {{3, 3}, 4}, {{2, 2, 2}, 3}, {{6}, 6}};
  EXPECT_EQ(w, expect);
  EXPECT_EQ(cycle_type_distribution(PermGroup::trivial(6)), (CycleTypeDistribution{{{1, 1, 1, 1, 1, 1}, 1}}));
  PermGroup c = G({"(1,6)(2,4)(3,5)", "(1,2,3)(4,6,5)"}, 6);
  EXPECT_EQ(cycle_type_distribution(c),
            (CycleTypeDistribution{{{1, 1, 1, 1, 1, 1}, 1}, {{3, 3}, 2}, {{2, 2, 2}, 3}}));
}

TEST(PermGroup, DistributionInvariantUnderConjugation) {
  std::mt19937 rng(5);
  PermGroup g = wreath4();
  for (int i = 0; i < 5; ++i) {
    std::vector<int> im(12);
    std::iota(im.begin(), im.end(), 1);
    std::shuffle(im.begin(), im.end(), rng);
    Permutation x(im);
    std::vector<Permutation> gens;
    for (const auto& s : g.generators()) gens.push_back(x.inverse() * s * x);
    PermGroup h = generate(gens);
    EXPECT_EQ(cycle_type_distribution(h), cycle_type_distribution(g));
    long total = 0;
    for (const auto& [k, c] : cycle_type_distribution(h)) total += c;
    EXPECT_EQ(total, 384);
  }
}

TEST(PermGroup, RootDensityExamples) {
  EXPECT_EQ(root_density(w3()), Rational(5, 18));
  EXPECT_EQ(root_density(G({"(1,6)(2,4)(3,5)", "(1,2,3)(4,6,5)"}, 6)), Rational(1, 6));
  EXPECT_EQ(root_density(G({"(1,2)", "(1,2,3)"}, 3)), Rational(2, 3));
  // Complement: fixed-point-free proportion.
  PermGroup g = wreath4();
  long fpf = 0;
  for (const auto& p : g.elements()) fpf += p.fixed_points() == 0;
  EXPECT_EQ(root_density(g) + Rational(Integer(fpf), Integer(384)), Rational(1));
}

TEST(PermGroup, PointDegrees) {
  EXPECT_EQ(point_degrees(w3()), (std::set<int>{6}));
  EXPECT_EQ(point_degrees(PermGroup::trivial(6)), (std::set<int>{1}));
  PermGroup h = G({"(1,2)(3,4,5)"}, 6);
  EXPECT_EQ(point_degrees(h), (std::set<int>{1, 2, 3}));
  for (int d : point_degrees(h)) EXPECT_EQ(h.order() % static_cast<std::size_t>(d), 0u);
}

TEST(PermGroup, AbelianInvariantsAndCenter) {
  EXPECT_EQ(abelian_invariants(G({"(1,2,3,4)(5,6,7,8)(9,10,11,12)", "(1,5,9)(2,6,10)(3,7,11)(4,8,12)"}, 12)),
            (std::vector<long>{3, 4}));
  EXPECT_EQ(abelian_invariants(G({"(1,2)", "(3,4)"}, 4)), (std::vector<long>{2, 2}));
  EXPECT_EQ(abelian_invariants(G({"(1,2)", "(1,2,3,4)"}, 4)), (std::vector<long>{2}));
  EXPECT_EQ(abelian_invariants(G({"(1,2,3)", "(3,4,5)"}, 5)), (std::vector<long>{}));
  EXPECT_EQ(abelian_invariants(wreath4()), (std::vector<long>{2, 4}));
  EXPECT_EQ(center(wreath4()).order(), 4u);
  EXPECT_EQ(center(G({"(1,2)", "(1,2,3,4)"}, 4)).order(), 1u);
  EXPECT_TRUE(is_cyclic(G({"(1,2,3)(4,5)"}, 5)));
  EXPECT_FALSE(is_cyclic(G({"(1,2)", "(3,4)"}, 4)));
}

TEST(Lattice, SmallExamples) {
  SubgroupLattice w(w3());
  auto maxes = w.maximal_subclasses(w.size() - 1);
  std::multiset<std::size_t> orders;
  for (auto i : maxes) orders.insert(w.order(i));
  EXPECT_EQ(orders, (std::multiset<std::size_t>{6, 6, 9}));
  EXPECT_EQ(subgroup_conjugacy_classes(PermGroup::trivial(6)).size(), 1u);
  EXPECT_EQ(w.order(0), 1u);
  EXPECT_EQ(w.representative(w.size() - 1), w3());
}

TEST(Lattice, WreathProductHas164Classes) {
  SubgroupLattice lat(wreath4());
  EXPECT_EQ(lat.size(), 164u);
  std::size_t total = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) total += lat.class_length(i);
  EXPECT_GT(total, 164u);
}

TEST(Lattice, MatchesBruteForceOnSmallGroups) {
  std::vector<PermGroup> groups = {
      w3(),
      G({"(1,2)", "(1,2,3,4)"}, 4),                                 // S4
      G({"(1,2,3,4)", "(1,3)"}, 4),                                 // D8
      G({"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"}, 8),           // Q8
      G({"(1,2,3)", "(1,2)", "(4,5)"}, 5),                          // S3 x C2
      G({"(1,6)(2,4)(3,5)", "(1,2,3)(4,6,5)"}, 6),
      G({"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}, 7),                  // 7:3
  };
  for (const PermGroup& g : groups) {
    SubgroupLattice lat(g);
    std::multiset<std::pair<std::size_t, std::size_t>> got;
    for (std::size_t i = 0; i < lat.size(); ++i) got.insert({lat.order(i), lat.class_length(i)});
    EXPECT_EQ(got, oracle::brute_force_classes(g)) << "order " << g.order();
  }
}

TEST(Lattice, ContainmentUpToConjugacy) {
  PermGroup w = w3();
  PermGroup a = G({"(1,2,3)", "(1,2,3)(4,5,6)"}, 6);
  PermGroup b = G({"(1,5,2,6,3,4)", "(1,2,3)(4,5,6)"}, 6);
  PermGroup c = G({"(1,6)(2,4)(3,5)", "(1,2,3)(4,6,5)"}, 6);
  PermGroup h = G({"(1,6)(2,4)(3,5)"}, 6);
  PermGroup j = G({"(1,2,3)(4,6,5)"}, 6);
  EXPECT_TRUE(contained_up_to_conjugacy(j, a, w));
  EXPECT_TRUE(contained_up_to_conjugacy(h, b, w));
  EXPECT_FALSE(contained_up_to_conjugacy(a, c, w));
  SubgroupLattice lat(w);
  EXPECT_TRUE(lat.contained(lat.class_of(j), lat.class_of(a)));
  EXPECT_FALSE(lat.contained(lat.class_of(a), lat.class_of(c)));
  EXPECT_EQ(lat.order(lat.class_of(b)), 6u);
  EXPECT_THROW(SubgroupLattice(wreath4(), 100), LatticeCapExceeded);
}

TEST(Fingerprint, ConjugatesShareFingerprint) {
  SubgroupLattice lat(wreath4());
  Permutation x = P("(1,5)(2,7)(3,6,9)", 12);
  for (std::size_t i = 0; i < lat.size(); i += 7) {
    const PermGroup& h = lat.representative(i);
    PermGroup hc = conjugate(h, lat.group().elements()[static_cast<std::size_t>(i * 31) % 384]);
    EXPECT_EQ(fingerprint(hc), fingerprint(h));
    GroupFingerprint other = fingerprint(conjugate(h, x));
    EXPECT_EQ(other.order, h.order());
    EXPECT_EQ(other.cycle_types, fingerprint(h).cycle_types);
  }
}
