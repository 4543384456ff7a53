// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "mtfcost/model.hpp"

namespace mtfcost {

/// {family, gamma, u, mass} with family in {"gg", "stable", "gamma"};
/// fields that a family does not use are omitted.
nlohmann::ordered_json exponent_to_json(const LaplaceExponent& exponent);
LaplaceExponent exponent_from_json(const nlohmann::json& j);

/// Model serialization adds family "py" with {gamma, theta} and writes
/// the gamma family as {family: "gamma", theta}.
nlohmann::ordered_json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& j);

}  // namespace mtfcost
