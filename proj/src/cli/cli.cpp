#include "dyn/cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dyn/arith/intfactor.hpp"
#include "dyn/arith/poly_json.hpp"
#include "dyn/arith/poly_text.hpp"
#include "dyn/classify/families.hpp"
#include "dyn/cli/json_out.hpp"
#include "dyn/dynamics/dynatomic.hpp"
#include "dyn/errors.hpp"

namespace dyn::cli {

namespace {

// Thrown for malformed values that CLI11 itself cannot validate.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string output = "table";
  std::size_t prime_budget = kDefaultPrimeBudget;
  std::uint64_t prime_bound = kDefaultPrimeBound;
  std::uint64_t factor_effort = 0;

  ClassifyOptions classify_options() const {
    ClassifyOptions o;
    o.prime_budget = prime_budget;
    o.prime_bound = prime_bound;
    return o;
  }
};

struct Target {
  std::string family;
  int n = 3;
  std::string v;
  bool has_v() const { return !v.empty(); }
};

Rational parse_value(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError("invalid rational '" + text + "'");
  }
}

Family parse_family(const std::string& text) {
  try {
    return family_from_string(text);
  } catch (const Error&) {
    throw UsageError("invalid family '" + text + "' (expected no-auto or auto)");
  }
}

RationalMap parse_map(const std::string& text) {
  try {
    RationalMap f = RationalMap::parse(text);
    if (f.base() != Base::Q) throw UsageError("map must not involve t: '" + text + "'");
    return f;
  } catch (const ParseError& e) {
    throw UsageError(std::string("invalid map: ") + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void add_family(CLI::App* sub, Target& t, bool required = true) {
  auto* o = sub->add_option("--family", t.family, "no-auto (v(x-1)/x^2) or auto ((2x-1)/(vx^2-1))");
  if (required) o->required();
}

void add_n(CLI::App* sub, Target& t) {
  sub->add_option("--n", t.n, "period (3 or 4)")->check(CLI::IsMember({3, 4}));
}

json classify_cmd(const Config& cfg, const Target& t, bool no_identify) {
  ClassifyOptions o = cfg.classify_options();
  o.identify = !no_identify;
  return to_json(classify(parse_family(t.family), t.n, parse_value(t.v), o));
}

json dynatomic_cmd(const Target& t, bool symbolic) {
  Family f = parse_family(t.family);
  json out = {{"family", to_string(f)}, {"n", t.n}};
  if (symbolic) {
    if (t.n > 4) throw UsageError("--symbolic supports n <= 4");
    BiPoly phi = dynatomic(family_generic(f), t.n);
    out["polynomial"] = to_string(phi);
    out["terms"] = to_json(phi);
    out["degree_x"] = phi.degree_x();
    return out;
  }
  if (!t.has_v()) throw UsageError("dynatomic needs --v or --symbolic");
  Rational v = parse_value(t.v);
  check_parameter(f, v);
  UniPoly p = dynatomic_x(family_map(f, v), t.n);
  out["v"] = to_json(v);
  out["polynomial"] = to_string(p);
  out["coefficients"] = to_json(p);
  out["degree"] = p.degree();
  out["generic_degree"] = generic_dynatomic_degree(f, t.n);
  return out;
}

std::size_t resolve_class(const GroupCatalog& cat, const std::string& label) {
  if (label.empty()) return cat.lattice().size() - 1;
  try {
    return cat.class_index(label);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> resolve_set(const GroupCatalog& cat, const std::string& name) {
  try {
    return cat.label_set(name);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

json group_cmd(const Config& cfg, const Target& t, const std::string& mode, const std::string& label,
               const std::string& set) {
  Family f = parse_family(t.family);
  const GroupCatalog& cat = group_catalog(f, t.n);
  if (mode == "subgroups") return subgroup_listing(cat);
  if (t.has_v() && (mode == "density" || mode == "degrees")) {
    ClassificationResult c = classify(f, t.n, parse_value(t.v), cfg.classify_options());
    json out = {{"family", to_string(f)}, {"n", t.n}, {"v", to_json(c.v)}, {"status", to_string(c.status)},
                {"labels", c.labels}};
    if (mode == "density") out["density"] = to_json(padic_density(c));
    else out["degrees"] = periodic_point_degrees(c);
    return out;
  }
  if (!set.empty() && (mode == "density" || mode == "degrees")) {
    std::vector<std::string> labels = resolve_set(cat, set);
    json out = {{"family", to_string(f)}, {"n", t.n}, {"set", set}, {"size", labels.size()}};
    if (mode == "degrees") {
      std::set<int> all;
      for (const auto& l : labels) {
        auto d = point_degrees(cat.group(l));
        all.insert(d.begin(), d.end());
      }
      out["degrees"] = all;
      return out;
    }
    json per = json::object();
    Rational best(0);
    for (const auto& l : labels) {
      Rational rd = root_density(cat.group(l));
      per[l] = to_json(rd);
      best = std::max(best, rd);
    }
    out["root_densities"] = per;
    out["max_root_density"] = to_json(best);
    out["no_root_bound"] = to_json(Rational(1) - best);
    return out;
  }
  json info = group_info(cat, resolve_class(cat, label));
  if (mode == "info") return info;
  if (mode == "degrees") return {{"label", info["label"]}, {"degrees", info["degrees"]}};
  return {{"label", info["label"]}, {"root_density", info["root_density"]}, {"no_root_density", info["no_root_density"]}};
}

json identify_cmd(const Config& cfg, const std::string& coeffs, const Target& t, const std::string& candidates,
                  const std::string& set) {
  UniPoly p;
  try {
    p = parse_coefficient_list(coeffs);
  } catch (const ParseError& e) {
    throw UsageError(std::string("invalid coefficient list: ") + e.what());
  }
  if (t.family.empty()) {
    if (!candidates.empty() || !set.empty()) throw UsageError("candidate groups need --family and --n");
    return {{"polynomial", to_string(p)}, {"sample", to_json(frobenius_sample(p, cfg.prime_budget, cfg.prime_bound))}};
  }
  const GroupCatalog& cat = group_catalog(parse_family(t.family), t.n);
  if (p.degree() != cat.ambient().degree())
    throw UsageError("polynomial degree " + std::to_string(p.degree()) + " does not match the catalog degree " +
                     std::to_string(cat.ambient().degree()));
  std::vector<std::string> labels;
  if (!candidates.empty()) {
    for (const auto& l : split_list(candidates)) {
      resolve_class(cat, l);
      labels.push_back(l);
    }
  } else {
    labels = resolve_set(cat, set.empty() ? "labels" : set);
  }
  IdentificationReport r = identify(p, cat.candidates(labels), cfg.prime_budget, cfg.prime_bound);
  json out = to_json(r);
  out["polynomial"] = to_string(p);
  return out;
}

json scan_cmd(const Target& t, int max_n) {
  Family f = parse_family(t.family);
  Rational v = parse_value(t.v);
  return {{"family", to_string(f)}, {"v", to_json(v)}, {"periods", to_json(rational_periodic_scan(f, v, max_n))}};
}

RationalMap map_from(const std::string& map_text, const Target& t) {
  if (!map_text.empty()) return parse_map(map_text);
  if (t.family.empty() || !t.has_v()) throw UsageError("give --map or both --family and --v");
  Family f = parse_family(t.family);
  Rational v = parse_value(t.v);
  check_parameter(f, v);
  return family_map(f, v);
}

json milnor_cmd(const std::string& map_text, const Target& t) {
  RationalMap f = map_from(map_text, t);
  json out = to_json(milnor_coordinates(f));
  out["map"] = f.str();
  out["multiplier_polynomial"] = to_string(fixed_point_multiplier_polynomial(f), 'y');
  return out;
}

json normal_form_cmd(const std::string& map_text) {
  RationalMap f = parse_map(map_text);
  std::optional<NormalForm> nf = normal_form(f);
  json out = {{"map", f.str()}, {"in_scope", nf.has_value()}};
  if (nf) {
    out["normal_form"] = to_json(*nf);
    out["normal_form"]["map"] = family_map(nf->family, nf->v).str();
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Dynatomic Galois groups of quadratic maps with a 2-periodic critical point", "dyn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", cfg.output, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--prime-budget", cfg.prime_budget, "good primes to sample")->check(CLI::PositiveNumber);
  app.add_option("--prime-bound", cfg.prime_bound, "upper bound for sampled primes")->check(CLI::Range(5, 1 << 30));
  app.add_option("--factor-effort", cfg.factor_effort, "Pollard rho iterations per integer (env DYN_FACTOR_EFFORT)")
      ->check(CLI::PositiveNumber);

  Target t;
  std::function<json()> action;

  auto* c = app.add_subcommand("classify", "classify the dynatomic Galois group G_{n,v}");
  bool no_identify = false;
  add_family(c, t);
  add_n(c, t);
  c->add_option("--v", t.v, "parameter, e.g. 9/2")->required();
  c->add_flag("--no-identify", no_identify, "skip Frobenius sampling");
  c->callback([&] { action = [&] { return classify_cmd(cfg, t, no_identify); }; });

  auto* d = app.add_subcommand("dynatomic", "dynatomic polynomial of a family member or of the generic map");
  bool symbolic = false;
  add_family(d, t);
  d->add_option("--n", t.n, "period")->check(CLI::Range(1, 6));
  d->add_option("--v", t.v, "parameter");
  d->add_flag("--symbolic", symbolic, "coefficients in Q[t][x]");
  d->callback([&] { action = [&] { return dynatomic_cmd(t, symbolic); }; });

  auto* g = app.add_subcommand("group", "subgroup catalog of the generic dynatomic group");
  std::string label, set;
  bool info = false, subgroups = false, density = false, degrees = false;
  add_family(g, t);
  add_n(g, t);
  g->add_option("--label", label, "group label or c<k> (default: the generic group)");
  g->add_option("--set", set, "named label set for --density/--degrees (all, labels; R, F, U, P for no-auto n=4)");
  g->add_option("--v", t.v, "classify at v and report for the result (--density/--degrees)");
  auto* gi = g->add_flag("--info", info, "order, degrees, densities and invariants");
  auto* gs = g->add_flag("--subgroups", subgroups, "all subgroup classes");
  auto* gd = g->add_flag("--density", density, "root and no-root densities");
  auto* gg = g->add_flag("--degrees", degrees, "degrees of n-periodic points");
  gi->excludes(gs)->excludes(gd)->excludes(gg);
  gs->excludes(gd)->excludes(gg);
  gd->excludes(gg);
  g->callback([&] {
    std::string mode = subgroups ? "subgroups" : density ? "density" : degrees ? "degrees" : "info";
    action = [&, mode] { return group_cmd(cfg, t, mode, label, set); };
  });

  auto* id = app.add_subcommand("identify", "Frobenius cycle-type sampling for a polynomial over Q");
  std::string coeffs, cands;
  id->add_option("--coeffs", coeffs, "comma-separated coefficients, constant first")->required();
  add_family(id, t, false);
  add_n(id, t);
  id->add_option("--candidates", cands, "comma-separated labels");
  id->add_option("--set", set, "named label set (default: labels)");
  id->callback([&] { action = [&] { return identify_cmd(cfg, coeffs, t, cands, set); }; });

  auto* s = app.add_subcommand("scan", "rational points of exact period n = 1..max-n");
  int max_n = 6;
  add_family(s, t);
  s->add_option("--v", t.v, "parameter")->required();
  s->add_option("--max-n", max_n, "largest period")->check(CLI::Range(1, 6));
  s->callback([&] { action = [&] { return scan_cmd(t, max_n); }; });

  auto* m = app.add_subcommand("milnor", "Milnor coordinates and curve membership");
  std::string map_text;
  m->add_option("--map", map_text, "rational map in x, e.g. \"1/x^2\"");
  add_family(m, t, false);
  m->add_option("--v", t.v, "parameter");
  m->callback([&] { action = [&] { return milnor_cmd(map_text, t); }; });

  auto* nf = app.add_subcommand("normal-form", "place a map with a 2-periodic critical point in its family");
  nf->add_option("--map", map_text, "rational map in x")->required();
  nf->callback([&] { action = [&] { return normal_form_cmd(map_text); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  set_default_rho_iterations(cfg.factor_effort);
  json result;
  try {
    result = action();
  } catch (const UsageError& e) {
    err << error_json("UsageError", e.what()).dump(2) << '\n';
    return 2;
  } catch (const Error& e) {
    err << error_json(e.kind(), e.what()).dump(2) << '\n';
    return 1;
  }
  if (cfg.output == "json") out << result.dump(2) << '\n';
  else render_table(result, out);
  return 0;
}

}  // namespace dyn::cli
