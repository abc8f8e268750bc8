#include "dyn/classify/parametrization.hpp"

#include <map>

#include "dyn/arith/roots.hpp"
#include "dyn/errors.hpp"

namespace dyn {

namespace {

std::vector<Parametrization> build() {
  auto map = [](const char* s) { return RationalMap::parse(s); };
  RationalMap alpha3 = map("(1 + x)^2/(1 - x + x^2)");
  RationalMap alpha4 = map("4x^2/(x^2 + 3)");
  RationalMap beta4 = map("4x^2/(x^2 + 15)");
  return {
      {ParamId::Eta, "eta", map("(x^3 + 3x^2 - 6x + 1)/(x(x - 1))")},
      {ParamId::Alpha3, "alpha3", alpha3},
      {ParamId::Beta3, "beta3", map("x^2(3 - x)")},
      {ParamId::Kappa, "kappa", map("(x^3 - 3x^2 - 6x - 1)^2/(1 + x + x^2)^3")},
      {ParamId::Mu3, "mu3", compose(alpha3, map("(x^3 - 3x - 1)/(x^3 + 3x^2 - 1)"))},
      {ParamId::Alpha4, "alpha4", alpha4},
      {ParamId::Beta4, "beta4", beta4},
      {ParamId::Delta, "delta", map("(x - 1)^2(x + 2)")},
      {ParamId::Iota, "iota", compose(beta4, map("45(1 + x - x^2)/((2x - 1)(x^2 - x - 11))"))},
      {ParamId::Mu4, "mu4", compose(alpha4, map("9x(x + 1)/((x - 1)(2 + x)(2x + 1))"))},
  };
}

const std::vector<Parametrization>& table() {
  static const std::vector<Parametrization> t = build();
  return t;
}

}  // namespace

const Parametrization& parametrization(ParamId id) { return table()[static_cast<std::size_t>(id)]; }

const std::vector<ParamId>& all_parametrizations() {
  static const std::vector<ParamId> ids = {ParamId::Eta,    ParamId::Alpha3, ParamId::Beta3, ParamId::Kappa,
                                           ParamId::Mu3,    ParamId::Alpha4, ParamId::Beta4, ParamId::Delta,
                                           ParamId::Iota,   ParamId::Mu4};
  return ids;
}

ParamId parametrization_from_name(const std::string& name) {
  for (const Parametrization& p : table())
    if (p.name == name) return p.id;
  throw InvalidArgument("unknown parametrization: " + name);
}

std::optional<Rational> evaluate(const Parametrization& p, const Rational& t) {
  UniPoly num = p.rho.num_x(), den = p.rho.den_x();
  Rational d = den(t);
  if (d.is_zero()) return std::nullopt;
  return num(t) / d;
}

std::optional<Rational> image_preimage(const Parametrization& p, const Rational& v, const FactorEffort& effort) {
  UniPoly num = p.rho.num_x(), den = p.rho.den_x();
  // num and den are coprime, so a root of num - v den never makes den vanish.
  UniPoly eq = num - den * UniPoly::constant(v);
  if (eq.is_zero()) return Rational(0);
  auto roots = rational_roots(eq, effort);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

bool image_contains(const Parametrization& p, const Rational& v, const FactorEffort& effort) {
  return image_preimage(p, v, effort).has_value();
}

}  // namespace dyn
