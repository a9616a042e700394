#pragma once

#include <json.hpp>

#include "fibhess/families.hpp"
#include "fibhess/laurent.hpp"

// Lossless JSON forms: rational parts travel as "p/q" strings, never floats.
// Polynomial schema:
//   { "k": int, "terms": [ { "exps": [int x k], "re": "p/q", "im": "p/q" } ] }
// with terms in canonical (graded-lex descending) order.

namespace fibhess {

nlohmann::json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const FamilySpec& spec);
nlohmann::json eval_to_json(const FamilySpec& spec, const std::string& op,
                            const LaurentPoly& result);
nlohmann::json eval_to_json(const FamilySpec& spec, const std::string& op,
                            const GaussianRational& result);

} // namespace fibhess
