#pragma once

#include <json.hpp>

#include "mapenum/exact/param_poly.hpp"
#include "mapenum/exact/radical.hpp"
#include "mapenum/exact/rational.hpp"
#include "mapenum/exact/upoly.hpp"

namespace mapenum {

// Rational <-> "p/q"
nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

// RadicalElem <-> {"m": m, "k": "p/q", "coeffs": [...]}; plain rationals use m = 1, k = "1".
nlohmann::json to_json(const RadicalElem& e);
RadicalElem radical_from_json(const nlohmann::json& j);

// ParamPoly <-> [{"eA": a, "eB": b, "c": RadicalElem}, ...]
nlohmann::json to_json(const ParamPoly& p);
ParamPoly param_poly_from_json(const nlohmann::json& j);

// UPoly <-> ascending coefficient list
nlohmann::json to_json(const UPoly& p);
UPoly upoly_from_json(const nlohmann::json& j);

}  // namespace mapenum
