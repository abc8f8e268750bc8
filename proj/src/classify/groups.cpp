#include "dyn/classify/groups.hpp"

#include <algorithm>
#include <mutex>

#include "dyn/errors.hpp"

namespace dyn {

namespace {

PermGroup gens(std::initializer_list<const char*> cycles, int degree) {
  std::vector<Permutation> v;
  for (const char* c : cycles) v.push_back(Permutation::parse(c, degree));
  return generate(degree, v);
}

using Inv = std::vector<long>;

}  // namespace

GroupCatalog::GroupCatalog(Family f, int n) : family_(f), n_(n) {
  if (n == 3) {
    // (Z/3) wr S_2, the centraliser of (1,2,3)(4,5,6) in S_6.
    lattice_ = std::make_unique<SubgroupLattice>(gens({"(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"}, 6));
    ambient_label_ = "W";
  } else if (n == 4 && f == Family::Auto) {
    // (Z/4) x S_3 inside the centraliser of (1,2,3,4)(5,6,7,8)(9,10,11,12).
    lattice_ = std::make_unique<SubgroupLattice>(gens(
        {"(1,2,3,4)(5,6,7,8)(9,10,11,12)", "(1,5)(2,6)(3,7)(4,8)", "(1,5,9)(2,6,10)(3,7,11)(4,8,12)"}, 12));
    ambient_label_ = "V";
  } else if (n == 4) {
    // (Z/4) wr S_3, the same centraliser.
    lattice_ = std::make_unique<SubgroupLattice>(
        gens({"(1,2,3,4)", "(1,5,9)(2,6,10)(3,7,11)(4,8,12)", "(1,5)(2,6)(3,7)(4,8)"}, 12));
    ambient_label_ = "G";
  } else {
    throw InvalidArgument("only n = 3 and n = 4 are catalogued");
  }
  fingerprints_.resize(lattice_->size());
  name(ambient_label_, lattice_->size() - 1);
  if (n == 3 && f == Family::NoAuto) label_no_auto_3();
  if (n == 3 && f == Family::Auto) label_auto_3();
  if (n == 4 && f == Family::Auto) label_auto_4();
  if (n == 4 && f == Family::NoAuto) label_no_auto_4();
}

void GroupCatalog::name(const std::string& label, std::size_t cls) {
  if (by_label_.count(label)) throw AmbiguousLabel(label, {by_label_.at(label), cls});
  labels_.push_back(label);
  by_label_[label] = cls;
  // A class reached by two labelling rules keeps its first name; the other
  // stays usable as an alias.
  by_class_.emplace(cls, label);
}

std::size_t GroupCatalog::pick(const std::string& label, const std::vector<std::size_t>& pool,
                               const std::function<bool(std::size_t)>& pred) {
  std::vector<std::size_t> hits;
  for (std::size_t c : pool)
    if (pred(c)) hits.push_back(c);
  if (hits.size() != 1) throw AmbiguousLabel(label, hits);
  name(label, hits.front());
  return hits.front();
}

const GroupFingerprint& GroupCatalog::fingerprint_of(std::size_t cls) const {
  if (!fingerprints_[cls]) fingerprints_[cls] = std::make_unique<GroupFingerprint>(fingerprint(lattice_->representative(cls)));
  return *fingerprints_[cls];
}

std::size_t GroupCatalog::class_index(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it != by_label_.end()) return it->second;
  if (label.size() > 1 && label[0] == 'c' && label.find_first_not_of("0123456789", 1) == std::string::npos) {
    std::size_t k = std::stoul(label.substr(1));
    if (k >= 1 && k <= lattice_->size()) return k - 1;
  }
  throw InvalidArgument("no group labelled " + label + " for n = " + std::to_string(n_) + ", " + to_string(family_));
}

std::string GroupCatalog::name_of(std::size_t cls) const {
  auto it = by_class_.find(cls);
  return it != by_class_.end() ? it->second : "c" + std::to_string(cls + 1);
}

std::vector<std::string> GroupCatalog::labels_of(std::size_t cls) const {
  std::vector<std::string> out;
  for (const auto& l : labels_)
    if (by_label_.at(l) == cls) out.push_back(l);
  return out;
}

std::vector<std::string> GroupCatalog::label_set(const std::string& name) const {
  if (name == "all") {
    std::vector<std::string> out;
    for (std::size_t i = lattice_->size(); i-- > 0;) out.push_back(name_of(i));
    return out;
  }
  if (name == "labels") return labels_;
  auto it = sets_.find(name);
  if (it == sets_.end()) throw InvalidArgument("no label set " + name + " for this family and n");
  return it->second;
}

std::vector<LabeledGroup> GroupCatalog::candidates(const std::vector<std::string>& labels) const {
  std::vector<LabeledGroup> out;
  for (const auto& l : labels) out.emplace_back(l, group(l));
  return out;
}

void GroupCatalog::label_no_auto_3() {
  const SubgroupLattice& L = *lattice_;
  name("A", L.class_of(gens({"(1,2,3)", "(1,2,3)(4,5,6)"}, 6)));
  name("B", L.class_of(gens({"(1,5,2,6,3,4)", "(1,2,3)(4,5,6)"}, 6)));
  name("C", L.class_of(gens({"(1,6)(2,4)(3,5)", "(1,2,3)(4,6,5)"}, 6)));
  name("H", L.class_of(gens({"(1,6)(2,4)(3,5)"}, 6)));
  name("J", L.class_of(gens({"(1,2,3)(4,6,5)"}, 6)));
}

void GroupCatalog::label_auto_3() {
  const SubgroupLattice& L = *lattice_;
  auto maxes = L.maximal_subclasses(L.size() - 1);
  std::size_t a = pick("A", maxes, [&](std::size_t c) { return L.order(c) == 9; });
  std::size_t b = pick("B", maxes, [&](std::size_t c) { return L.order(c) == 6 && fingerprint_of(c).cyclic; });
  std::size_t cc = pick("C", maxes, [&](std::size_t c) { return L.order(c) == 6 && !fingerprint_of(c).cyclic; });
  auto in_a = L.maximal_subclasses(a);
  pick("J", in_a, [&](std::size_t c) { return L.contained(c, cc); });
  pick("K", in_a, [&](std::size_t c) { return !L.contained(c, cc) && !L.contained(c, b); });
  pick("M", in_a, [&](std::size_t c) { return L.contained(c, b); });
  std::vector<std::size_t> all(L.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  pick("H", all, [&](std::size_t c) { return L.order(c) == 2; });
}

void GroupCatalog::label_auto_4() {
  const SubgroupLattice& L = *lattice_;
  auto maxes = L.maximal_subclasses(L.size() - 1);
  auto involutions = [&](std::size_t c) {
    auto& h = fingerprint_of(c).element_orders;
    auto it = h.find(2);
    return it == h.end() ? 0L : it->second;
  };
  std::size_t a = pick("A", maxes, [&](std::size_t c) { return L.order(c) == 12 && fingerprint_of(c).cyclic; });
  pick("B", maxes, [&](std::size_t c) { return L.order(c) == 12 && !fingerprint_of(c).cyclic && involutions(c) == 1; });
  pick("C", maxes, [&](std::size_t c) { return L.order(c) == 12 && !fingerprint_of(c).cyclic && involutions(c) > 1; });
  std::size_t d = pick("D", maxes, [&](std::size_t c) { return L.order(c) == 8; });
  auto in_a = L.maximal_subclasses(a);
  pick("H", in_a, [&](std::size_t c) { return L.order(c) == 6; });
  std::size_t m = pick("M", in_a, [&](std::size_t c) { return L.order(c) == 4; });
  auto in_d = L.maximal_subclasses(d);
  pick("K", in_d, [&](std::size_t c) { return L.order(c) == 4 && !fingerprint_of(c).cyclic; });
  std::size_t i = pick("I", in_d, [&](std::size_t c) { return L.order(c) == 4 && fingerprint_of(c).cyclic && c != m; });
  pick("J", L.maximal_subclasses(i), [](std::size_t) { return true; });
}

void GroupCatalog::label_no_auto_4() {
  const SubgroupLattice& L = *lattice_;
  auto ab = [&](std::size_t c) -> const Inv& { return fingerprint_of(c).abelian_invariants; };
  auto shape = [&](std::size_t c, const char* p) { return fingerprint_of(c).has_shape(parse_partition(p)); };

  auto maxes = L.maximal_subclasses(L.size() - 1);
  std::size_t m1 = pick("M1", maxes, [&](std::size_t c) { return L.order(c) == 192 && ab(c) == Inv{2, 2}; });
  std::size_t m2 = pick("M2", maxes, [&](std::size_t c) { return L.order(c) == 128; });
  std::size_t m3 = pick("M3", maxes, [&](std::size_t c) { return L.order(c) == 96; });
  pick("M4", maxes, [&](std::size_t c) { return L.order(c) == 192 && ab(c) == Inv{3, 4}; });
  pick("M5", maxes, [&](std::size_t c) { return L.order(c) == 192 && ab(c) == Inv{4}; });

  auto in_m1 = L.maximal_subclasses(m1);
  pick("A1", in_m1, [&](std::size_t c) { return L.order(c) == 48; });
  pick("A2", in_m1, [&](std::size_t c) { return L.order(c) == 64; });
  pick("A3", in_m1, [&](std::size_t c) { return L.order(c) == 96 && ab(c) == Inv{2, 3}; });
  pick("A4", in_m1, [&](std::size_t c) { return L.order(c) == 96 && ab(c) == Inv{2} && shape(c, "2^6"); });
  pick("A5", in_m1, [&](std::size_t c) { return L.order(c) == 96 && ab(c) == Inv{2} && !shape(c, "2^6"); });

  auto in_m2 = L.maximal_subclasses(m2);
  std::size_t b1 = pick("B1", in_m2, [&](std::size_t c) { return ab(c) == Inv{2, 2, 4} && !shape(c, "8,4"); });
  std::size_t b2 = pick("B2", in_m2, [&](std::size_t c) { return ab(c) == Inv{2, 2, 2, 4}; });
  pick("B3", in_m2, [&](std::size_t c) { return ab(c) == Inv{2, 4, 4}; });
  pick("B4", in_m2, [&](std::size_t c) { return ab(c) == Inv{4, 4} && !shape(c, "8,4"); });
  pick("B5", in_m2, [&](std::size_t c) { return ab(c) == Inv{4, 4, 4}; });
  pick("B6", in_m2, [&](std::size_t c) { return ab(c) == Inv{4, 4} && shape(c, "8,4"); });
  pick("B7", in_m2, [&](std::size_t c) { return ab(c) == Inv{2, 2, 4} && shape(c, "8,4"); });

  auto in_m3 = L.maximal_subclasses(m3);
  pick("C1", in_m3, [&](std::size_t c) { return L.order(c) == 24; });
  pick("C2", in_m3, [&](std::size_t c) { return L.order(c) == 32; });

  pick("J", L.maximal_subclasses(b1),
       [&](std::size_t c) { return ab(c) == Inv{2, 4} && !shape(c, "8,2,2") && !shape(c, "2^6"); });
  const std::map<int, long> k_orders = {{1, 1}, {2, 11}, {4, 20}};
  pick("K", L.maximal_subclasses(b2), [&](std::size_t c) {
    return ab(c) == Inv{2, 2, 4} && fingerprint_of(c).element_orders == k_orders && shape(c, "4,1^8") &&
           shape(c, "4,2,2,1^4");
  });

  sets_["F"] = {"M4", "M5", "A2", "A3", "A4", "A5", "B3", "B4", "B6", "B7", "J"};
  sets_["R"] = {"G", "M1", "M2", "M3", "A1", "B1", "B2", "C1", "C2", "K"};
  // U: classes outside R not contained in any member of F or in K.
  std::vector<std::size_t> blockers;
  for (const auto& l : sets_["F"]) blockers.push_back(by_label_.at(l));
  blockers.push_back(by_label_.at("K"));
  std::vector<std::size_t> r_classes;
  for (const auto& l : sets_["R"]) r_classes.push_back(by_label_.at(l));
  std::vector<std::string> u;
  for (std::size_t c = 0; c < L.size(); ++c) {
    if (std::find(r_classes.begin(), r_classes.end(), c) != r_classes.end()) continue;
    bool blocked = false;
    for (std::size_t b : blockers)
      if (L.contained(c, b)) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    std::string label = "U" + std::to_string(u.size() + 1);
    name(label, c);
    u.push_back(label);
  }
  sets_["U"] = u;
  sets_["P"] = sets_["R"];
  sets_["P"].insert(sets_["P"].end(), u.begin(), u.end());
}

const GroupCatalog& group_catalog(Family f, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GroupCatalog>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<GroupCatalog>(f, n)).first;
  return *it->second;
}

}  // namespace dyn
