#include "dyn/arith/poly_json.hpp"

#include "dyn/errors.hpp"

namespace dyn {

nlohmann::json to_json(const Rational& r) { return r.str(); }

nlohmann::json to_json(const UniPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& c : p.coeffs()) out.push_back(c.str());
  return out;
}

nlohmann::json to_json(const BiPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (auto& [k, c] : p.terms()) out.push_back({k.first, k.second, c.str()});
  return out;
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of coefficients, got " + j.dump());
  std::vector<Rational> cs;
  for (const auto& item : j) cs.push_back(rational_from_json(item));
  return UniPoly(std::move(cs));
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of terms, got " + j.dump());
  BiPoly out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() || !item[1].is_number_integer() ||
        item[0].get<long>() < 0 || item[1].get<long>() < 0) {
      throw ParseError("expected [t_deg, x_deg, coefficient], got " + item.dump());
    }
    out += BiPoly::term(rational_from_json(item[2]), item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

}  // namespace dyn
