#pragma once

// JSON form of symbolic expressions:
//   {"terms": [{"coeff": {"num": "1", "den": "8"},
//               "atoms": [{"kind": "psi", "order": 2, "arg": {"num": "1", "den": "2"}, "power": 1}]}]}
// Numbers are decimal strings so that big coefficients survive any reader.
// Kinds: psi, zeta (n), pi, log (n), gamma, alpha, psi_root (order) and
// root_sum, which carries "poly" (ascending coefficients) and "template".

#include <json.hpp>

#include "eulersum/symbolic.hpp"

namespace eulersum {

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymbolicExpression& e);
/// Throws std::invalid_argument naming the offending field.
SymbolicExpression from_json(const nlohmann::json& j);

}  // namespace eulersum
