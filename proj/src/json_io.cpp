// SPDX-License-Identifier: Apache-2.0
#include "mtfcost/json_io.hpp"

#include <stdexcept>
#include <string>

namespace mtfcost {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json exponent_to_json(const LaplaceExponent& exponent) {
  struct Visitor {
    ordered_json operator()(const GenGammaExponent& e) const {
      return {{"family", "gg"}, {"gamma", e.gamma()}, {"u", e.u()}, {"mass", e.mass()}};
    }
    ordered_json operator()(const GammaExponent& e) const {
      return {{"family", "gamma"}, {"mass", e.mass()}};
    }
    ordered_json operator()(const StableExponent& e) const {
      return {{"family", "stable"}, {"gamma", e.gamma()}, {"mass", e.mass()}};
    }
  };
  return std::visit(Visitor{}, exponent);
}

LaplaceExponent exponent_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  const double mass = j.value("mass", 1.0);
  if (family == "gg") {
    return GenGammaExponent(j.at("gamma").get<double>(), j.value("u", 0.0), mass);
  }
  if (family == "gamma") return GammaExponent(mass);
  if (family == "stable") {
    return StableExponent(j.at("gamma").get<double>(), mass);
  }
  throw std::invalid_argument("unknown exponent family: " + family);
}

ordered_json model_to_json(const Model& model) {
  struct Visitor {
    ordered_json operator()(const GenGammaExponent& e) const {
      return exponent_to_json(LaplaceExponent(e));
    }
    ordered_json operator()(const StableExponent& e) const {
      return exponent_to_json(LaplaceExponent(e));
    }
    ordered_json operator()(const DirichletModel& m) const {
      return {{"family", "gamma"}, {"theta", m.theta()}};
    }
    ordered_json operator()(const PitmanYorModel& m) const {
      return {{"family", "py"}, {"gamma", m.gamma()}, {"theta", m.theta()}};
    }
  };
  return std::visit(Visitor{}, model);
}

Model model_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "gg") {
    return GenGammaExponent(j.at("gamma").get<double>(), j.value("u", 0.0),
                            j.value("mass", 1.0));
  }
  if (family == "stable") {
    return StableExponent(j.at("gamma").get<double>(), j.value("mass", 1.0));
  }
  if (family == "gamma") {
    if (j.contains("theta")) return DirichletModel(j.at("theta").get<double>());
    return DirichletModel(j.at("mass").get<double>());
  }
  if (family == "py") {
    return PitmanYorModel(j.at("gamma").get<double>(), j.at("theta").get<double>());
  }
  throw std::invalid_argument("unknown model family: " + family);
}

}  // namespace mtfcost
