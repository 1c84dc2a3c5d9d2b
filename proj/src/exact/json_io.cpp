#include "mapenum/exact/json_io.hpp"

#include "mapenum/error.hpp"

namespace mapenum {

using nlohmann::json;

json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.get<std::string>());
}

json to_json(const RadicalElem& e) {
  json coeffs = json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(c.str());
  const int m = e.field() ? e.field()->degree() : 1;
  const Rational k = e.field() ? e.field()->radicand() : Rational(1);
  return json{{"m", m}, {"k", k.str()}, {"coeffs", coeffs}};
}

RadicalElem radical_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  if (m == 1) return coeffs.empty() ? RadicalElem() : RadicalElem(coeffs[0]);
  return RadicalElem(make_field(m, rational_from_json(j.at("k"))), std::move(coeffs));
}

json to_json(const ParamPoly& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({{"eA", k.first}, {"eB", k.second}, {"c", to_json(c)}});
  return out;
}

ParamPoly param_poly_from_json(const json& j) {
  ParamPoly p;
  for (const auto& t : j)
    p += ParamPoly::monomial(t.at("eA").get<int>(), t.at("eB").get<int>(), radical_from_json(t.at("c")));
  return p;
}

json to_json(const UPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

UPoly upoly_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return UPoly(std::move(c));
}

}  // namespace mapenum
