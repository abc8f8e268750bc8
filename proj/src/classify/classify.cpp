#include "dyn/classify/classify.hpp"

#include <algorithm>

#include "dyn/classify/families.hpp"
#include "dyn/classify/groups.hpp"
#include "dyn/errors.hpp"

namespace dyn {

std::string to_string(Status s) {
  switch (s) {
    case Status::Certified:
      return "certified";
    case Status::CandidateSet:
      return "candidate-set";
    case Status::Heuristic:
      return "heuristic";
  }
  return "heuristic";
}

namespace {

class Tree {
 public:
  Tree(Family f, int n, const Rational& v, const ClassifyOptions& o) : opts_(o) {
    r_.family = f;
    r_.n = n;
    r_.v = v;
  }

  bool member(ParamId id) {
    const Parametrization& p = parametrization(id);
    auto t = image_preimage(p, r_.v);
    r_.memberships.push_back({p.name, t.has_value(), t});
    return t.has_value();
  }

  void run_resolvents() {
    for (const ResolventEntry* e : resolvent_entries(r_.family, r_.n)) {
      ResolventOutcome o = resolvent_root_test(*e, r_.v);
      if (o.verdict == ResolventVerdict::Inconclusive)
        r_.notes.push_back("resolvent q_" + e->label + " is inconclusive at this v (its discriminant vanishes)");
      r_.resolvents.push_back({e->label, std::move(o)});
    }
  }

  ClassificationResult certified(const std::string& label, const std::string& branch) {
    r_.status = Status::Certified;
    r_.labels = {label};
    r_.branch = branch;
    return r_;
  }

  // Candidate sets shrink by certain Frobenius eliminations; a lone survivor
  // is flagged best but the status stays candidate-set.
  ClassificationResult candidates(std::vector<std::string> labels, const std::string& branch) {
    r_.status = Status::CandidateSet;
    r_.branch = branch;
    if (opts_.identify && labels.size() > 1) {
      const GroupCatalog& cat = group_catalog(r_.family, r_.n);
      IdentificationReport rep =
          identify(projective_dynatomic(r_.family, r_.n, r_.v), cat.candidates(labels), opts_.prime_budget, opts_.prime_bound);
      std::vector<std::string> kept;
      for (const CandidateVerdict& c : rep.candidates)
        if (c.status == CandidateStatus::Consistent) kept.push_back(c.label);
      if (kept.empty()) {
        r_.notes.push_back("every candidate was eliminated by Frobenius sampling; keeping the full candidate set");
      } else {
        labels = kept;
      }
      r_.best = rep.best;
      r_.identification = std::move(rep);
    } else if (labels.size() == 1) {
      r_.best = labels.front();
    }
    r_.labels = std::move(labels);
    return r_;
  }

  // No certified branch applies: identify among every subgroup class.
  ClassificationResult heuristic(const std::string& branch) {
    r_.status = Status::Heuristic;
    r_.branch = branch;
    const GroupCatalog& cat = group_catalog(r_.family, r_.n);
    IdentificationReport rep = identify(projective_dynatomic(r_.family, r_.n, r_.v),
                                        cat.candidates(cat.label_set("all")), opts_.prime_budget, opts_.prime_bound);
    if (rep.best) r_.labels = {*rep.best};
    r_.best = rep.best;
    r_.notes.push_back("identified by Frobenius sampling only; not certified");
    r_.identification = std::move(rep);
    return r_;
  }

  ClassificationResult& result() { return r_; }

 private:
  ClassifyOptions opts_;
  ClassificationResult r_;
};

std::vector<std::string> intersect(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  return out;
}

ClassificationResult no_auto_3(Tree& t, const Rational& v) {
  t.run_resolvents();
  if (v == Rational(3)) return t.heuristic("v = 3: resolvents degenerate");
  if (t.member(ParamId::Eta)) return t.certified("C", "v in Im eta");
  return t.certified("W", "v outside Im eta");
}

ClassificationResult auto_3(Tree& t, const Rational& v) {
  t.run_resolvents();
  if (v == Rational(1)) return t.heuristic("v = 1: discriminants vanish");
  if (t.member(ParamId::Mu3)) return t.certified("M", "v in Im mu");
  if (t.member(ParamId::Kappa)) return t.certified("K", "v in Im kappa");
  bool in_a = t.member(ParamId::Alpha3);
  bool in_b = t.member(ParamId::Beta3);
  if (!in_a && !in_b) return t.certified("W", "v outside Im alpha and Im beta");
  std::vector<std::string> set = {"A", "B", "K", "M"};
  std::string branch;
  if (in_a) {
    set = intersect(set, {"A", "K", "M"});
    branch = "v in Im alpha";
  }
  if (in_b) {
    set = intersect(set, {"B", "M"});
    branch += branch.empty() ? "v in Im beta" : " and Im beta";
  }
  return t.candidates(set, branch);
}

ClassificationResult auto_4(Tree& t, const Rational& v) {
  t.run_resolvents();
  if (v == Rational(3, 2)) return t.heuristic("v = 3/2: discriminants vanish");
  if (t.member(ParamId::Iota)) return t.certified("I", "v in Im iota");
  if (t.member(ParamId::Mu4)) return t.certified("I", "v in Im mu (M and I are equivalent)");
  bool in_a = t.member(ParamId::Alpha4);
  bool in_b = t.member(ParamId::Beta4);
  bool in_d = t.member(ParamId::Delta);
  if (!in_a && !in_b && !in_d) return t.certified("V", "v outside Im alpha, Im beta and Im delta");
  std::vector<std::string> set = {"A", "B", "D", "I"};
  std::string branch;
  auto add = [&](bool in, const char* label, const char* name) {
    if (!in) return;
    set = intersect(set, {label, "I"});
    branch += branch.empty() ? std::string("v in Im ") + name : std::string(" and Im ") + name;
  };
  add(in_a, "A", "alpha");
  add(in_b, "B", "beta");
  add(in_d, "D", "delta");
  return t.candidates(set, branch);
}

const std::vector<Rational>& delta_values() {
  static const std::vector<Rational> d = {Rational(0), Rational(1), Rational(3, 2), Rational(8, 3), Rational(11, 2)};
  return d;
}

ClassificationResult no_auto_4(Tree& t, const Rational& v) {
  const auto& d = delta_values();
  if (std::find(d.begin(), d.end(), v) != d.end()) return t.heuristic("v in Delta: resolvents degenerate");
  return t.candidates(group_catalog(Family::NoAuto, 4).label_set("P"), "v outside Delta: candidate set P");
}

}  // namespace

ClassificationResult classify(Family f, int n, const Rational& v, const ClassifyOptions& opts) {
  if (n != 3 && n != 4) throw InvalidArgument("classification is available for n = 3 and n = 4 only");
  check_parameter(f, v);
  Tree t(f, n, v, opts);
  if (f == Family::NoAuto) return n == 3 ? no_auto_3(t, v) : no_auto_4(t, v);
  return n == 3 ? auto_3(t, v) : auto_4(t, v);
}

}  // namespace dyn
