// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <variant>

#include "mtfcost/subordinator.hpp"

namespace mtfcost {

/// Dirichlet(theta) request weights: gamma-subordinator increments with
/// total mass theta.
class DirichletModel {
 public:
  explicit DirichletModel(double theta);
  double theta() const { return theta_; }

 private:
  double theta_;
};

/// Two-parameter Poisson-Dirichlet weights: a generalized gamma
/// subordinator with u = 1 run over a random time Z ~ Gamma(theta/gamma, 1)
/// drawn once per weight vector. Conditional on Z = z the increments over
/// spacing 1/n have transform exp(-(z/n) [(1+s)^gamma - 1]), i.e. they are
/// GenGammaExponent(gamma, 1, mass = z * gamma) increments.
class PitmanYorModel {
 public:
  PitmanYorModel(double gamma, double theta);
  double gamma() const { return gamma_; }
  double theta() const { return theta_; }

  /// Conditional exponent given the mixing variable Z = z.
  GenGammaExponent conditional_exponent(double z) const;

 private:
  double gamma_, theta_;
};

using Model =
    std::variant<GenGammaExponent, StableExponent, DirichletModel, PitmanYorModel>;

/// The fixed Laplace exponent driving the model's weights, when there is
/// one (Pitman-Yor weights have a random exponent, so nullopt).
std::optional<LaplaceExponent> model_exponent(const Model& m);

}  // namespace mtfcost
