#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyn/arith/intfactor.hpp"
#include "dyn/dynamics/rational_map.hpp"

namespace dyn {

enum class ParamId { Eta, Alpha3, Beta3, Kappa, Mu3, Alpha4, Beta4, Delta, Iota, Mu4 };

// A rational function rho in one variable, stored as a coprime pair (t
// plays the role of x in the underlying RationalMap).
struct Parametrization {
  ParamId id;
  std::string name;  // "eta", "alpha3", ...
  RationalMap rho;
};

const Parametrization& parametrization(ParamId id);
const std::vector<ParamId>& all_parametrizations();
ParamId parametrization_from_name(const std::string& name);

// rho(t), empty where rho is undefined.
std::optional<Rational> evaluate(const Parametrization& p, const Rational& t);

// A rational t0 with rho(t0) = v, if one exists: the least such root of
// num(t) - v den(t). Propagates IntegerFactorizationEffortExceeded.
std::optional<Rational> image_preimage(const Parametrization& p, const Rational& v,
                                       const FactorEffort& effort = default_factor_effort());
bool image_contains(const Parametrization& p, const Rational& v,
                    const FactorEffort& effort = default_factor_effort());

}  // namespace dyn
