// SPDX-License-Identifier: Apache-2.0
#include "mtfcost/model.hpp"

#include <cmath>
#include <stdexcept>

namespace mtfcost {

DirichletModel::DirichletModel(double theta) : theta_(theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("DirichletModel: theta must be positive");
  }
}

PitmanYorModel::PitmanYorModel(double gamma, double theta)
    : gamma_(gamma), theta_(theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("PitmanYorModel: theta must be positive");
  }
  // Delegate the gamma range check.
  (void)GenGammaExponent(gamma, 1.0, 1.0);
}

GenGammaExponent PitmanYorModel::conditional_exponent(double z) const {
  return GenGammaExponent(gamma_, 1.0, z * gamma_);
}

std::optional<LaplaceExponent> model_exponent(const Model& m) {
  struct Visitor {
    std::optional<LaplaceExponent> operator()(const GenGammaExponent& e) const {
      return LaplaceExponent(e);
    }
    std::optional<LaplaceExponent> operator()(const StableExponent& e) const {
      return LaplaceExponent(e);
    }
    std::optional<LaplaceExponent> operator()(const DirichletModel& e) const {
      return LaplaceExponent(GammaExponent(e.theta()));
    }
    std::optional<LaplaceExponent> operator()(const PitmanYorModel&) const {
      return std::nullopt;
    }
  };
  return std::visit(Visitor{}, m);
}

}  // namespace mtfcost
