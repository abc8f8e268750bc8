#pragma once

#include <json.hpp>

#include "dyn/arith/bipoly.hpp"
#include "dyn/arith/rational.hpp"
#include "dyn/arith/unipoly.hpp"

namespace dyn {

// Rationals serialize as strings "a" or "a/b"; UniPolys as arrays of those,
// constant term first; BiPolys as arrays of [t_deg, x_deg, "a/b"] triples in
// ascending key order. Malformed input raises ParseError.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const BiPoly& p);

Rational rational_from_json(const nlohmann::json& j);
UniPoly unipoly_from_json(const nlohmann::json& j);
BiPoly bipoly_from_json(const nlohmann::json& j);

}  // namespace dyn
