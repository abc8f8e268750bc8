#include "dyn/cli/json_out.hpp"

#include <ostream>

#include "dyn/arith/poly_json.hpp"

namespace dyn::cli {

namespace {

std::string frac(long num, std::size_t den) { return Rational(Integer(num), Integer(static_cast<unsigned long>(den))).str(); }

json points(const std::vector<ProjPoint>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

json opt_string(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

}  // namespace

json to_json(const FrobeniusSample& s) {
  json freq = json::array();
  for (const auto& [type, count] : s.counts)
    freq.push_back({{"cycle_type", to_string(type)}, {"count", count}, {"frequency", frac(count, s.good)}});
  return {{"good_primes", s.good}, {"bad_primes", s.bad}, {"frequencies", freq}};
}

json to_json(const IdentificationReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json j = {{"label", c.label}, {"order", c.order}, {"status", to_string(c.status)}, {"l1", c.l1}};
    j["witness"] = c.witness ? json(to_string(*c.witness)) : json(nullptr);
    cands.push_back(j);
  }
  json out = {{"sample", to_json(r.sample)}, {"candidates", cands}, {"best", opt_string(r.best)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json to_json(const ClassificationResult& c) {
  json members = json::array();
  for (const auto& m : c.memberships) {
    json j = {{"parametrization", m.parametrization}, {"member", m.member}};
    j["preimage"] = m.preimage ? to_json(*m.preimage) : json(nullptr);
    members.push_back(j);
  }
  json resolvents = json::array();
  for (const auto& r : c.resolvents) {
    json roots = json::array();
    for (const auto& x : r.outcome.roots) roots.push_back(to_json(x));
    resolvents.push_back({{"label", r.label}, {"verdict", to_string(r.outcome.verdict)}, {"roots", roots}});
  }
  return {{"family", to_string(c.family)},
          {"n", c.n},
          {"v", to_json(c.v)},
          {"status", to_string(c.status)},
          {"labels", c.labels},
          {"best", opt_string(c.best)},
          {"branch", c.branch},
          {"memberships", members},
          {"resolvents", resolvents},
          {"identification", c.identification ? to_json(*c.identification) : json(nullptr)},
          {"notes", c.notes}};
}

json to_json(const DensityResult& d) {
  json per = json::object();
  for (const auto& [label, rd] : d.root_densities) per[label] = to_json(rd);
  return {{"no_root_density", to_json(d.no_root_density)}, {"lower_bound", d.lower_bound}, {"root_densities", per}};
}

json to_json(const std::vector<PeriodicScanEntry>& scan) {
  json out = json::array();
  for (const auto& e : scan) out.push_back({{"n", e.n}, {"points", points(e.points)}});
  return out;
}

json to_json(const MilnorPoint& m) {
  return {{"r", to_json(m.r)},
          {"s", to_json(m.s)},
          {"on_c1", on_curve(m, Curve::C1)},
          {"on_c2", on_curve(m, Curve::C2)},
          {"on_symmetry_locus", on_curve(m, Curve::Symmetry)}};
}

json to_json(const NormalForm& nf) {
  return {{"family", to_string(nf.family)},
          {"v", to_json(nf.v)},
          {"milnor", to_json(nf.milnor)},
          {"conjugation_verified", nf.conjugation_verified}};
}

json group_info(const GroupCatalog& cat, std::size_t cls) {
  const PermGroup& g = cat.lattice().representative(cls);
  const GroupFingerprint& fp = cat.fingerprint_of(cls);
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.str());
  json types = json::array();
  for (const auto& [t, k] : fp.cycle_types) types.push_back({{"cycle_type", to_string(t)}, {"count", k}});
  json orders = json::object();
  for (const auto& [o, k] : fp.element_orders) orders[std::to_string(o)] = k;
  json orbit_list = json::array();
  for (const auto& o : orbits(g)) {
    json pts = json::array();
    for (int p : o) pts.push_back(p + 1);
    orbit_list.push_back(pts);
  }
  Rational rd = root_density(g);
  return {{"family", to_string(cat.family())},
          {"n", cat.n()},
          {"label", cat.name_of(cls)},
          {"labels", cat.labels_of(cls)},
          {"class", cls + 1},
          {"order", g.order()},
          {"class_length", cat.lattice().class_length(cls)},
          {"generators", gens},
          {"orbits", orbit_list},
          {"degrees", point_degrees(g)},
          {"root_density", to_json(rd)},
          {"no_root_density", to_json(Rational(1) - rd)},
          {"cycle_types", types},
          {"abelian_invariants", fp.abelian_invariants},
          {"center_order", fp.center_order},
          {"element_orders", orders},
          {"cyclic", fp.cyclic}};
}

json subgroup_listing(const GroupCatalog& cat) {
  const SubgroupLattice& lat = cat.lattice();
  json classes = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    json maximal = json::array();
    for (auto m : lat.maximal_subclasses(i)) maximal.push_back(cat.name_of(m));
    classes.push_back({{"class", i + 1},
                       {"name", cat.name_of(i)},
                       {"labels", cat.labels_of(i)},
                       {"order", lat.order(i)},
                       {"class_length", lat.class_length(i)},
                       {"maximal_subgroups", maximal}});
  }
  return {{"family", to_string(cat.family())}, {"n", cat.n()}, {"count", lat.size()}, {"classes", classes}};
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

namespace {

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool all_scalar(const json& arr) {
  for (const auto& e : arr)
    if (e.is_structured()) return false;
  return true;
}

void flatten(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !all_scalar(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    std::string line;
    for (const auto& e : j) line += (line.empty() ? "" : ", ") + scalar(e);
    out << path << "  " << (j.empty() ? "-" : line) << '\n';
  } else {
    out << path << "  " << (j.is_null() ? "-" : scalar(j)) << '\n';
  }
}

}  // namespace

void render_table(const json& doc, std::ostream& out) { flatten(doc, "", out); }

}  // namespace dyn::cli
