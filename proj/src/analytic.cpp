// SPDX-License-Identifier: Apache-2.0
#include "mtfcost/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mtfcost/special_fn.hpp"

namespace mtfcost {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_order(int l, int k) {
  if (l < 1 || k < l) {
    throw std::domain_error("moment order: need 1 <= l <= k");
  }
}

bool diverges(double gamma, int k) { return !(gamma < 1.0 / (k + 1)); }

}  // namespace

double psi_l_gengamma_scaled(double gamma, double u, double mass, int l, int k) {
  check_order(l, k);
  if (diverges(gamma, k)) return kInf;
  const double lf = factorial(l);
  // Every Pochhammer factor is positive in the admissible region
  // gamma < 1/(k+1), and stays below 1e120 for l <= 25, gamma >= 1e-6.
  const double ratio = lf * lf / pochhammer(1.0 / gamma - l - 1.0, l);
  const double q = mass * std::pow(u, gamma) / gamma;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m <= l; ++m) {
    term *= q / m;
    sum += term;
  }
  return ratio * sum;
}

double psi_l_gengamma(double gamma, double u, int l, int k) {
  return psi_l_gengamma_scaled(gamma, u, 1.0, l, k);
}

double psi_l_pitman_yor(double gamma, double theta, int l, int k) {
  check_order(l, k);
  if (diverges(gamma, k)) return kInf;
  // l! (theta/gamma + 1)_l / ((1/gamma - l - 1)_l) as a product of
  // per-factor ratios, immune to overflow for small gamma.
  const double a = theta / gamma + 1.0;
  const double b = 1.0 / gamma - l - 1.0;
  double value = factorial(l);
  for (int j = 0; j < l; ++j) value *= (a + j) / (b + j);
  return value;
}

double psi_l_dirichlet(double theta, int l) {
  if (l < 1) throw std::domain_error("moment order: need l >= 1");
  return factorial(l) * std::pow(theta, l);
}

double moment_dirichlet(double theta, int k) {
  if (k < 1) throw std::domain_error("moment order: need k >= 1");
  double sum = 0.0;
  for (int l = 1; l <= k; ++l) {
    sum += static_cast<double>(stirling2(k, l)) * psi_l_dirichlet(theta, l);
  }
  return sum;
}

double psi_l_closed_form(const Model& model, int l, int k) {
  struct Visitor {
    int l, k;
    double operator()(const GenGammaExponent& e) const {
      return psi_l_gengamma_scaled(e.gamma(), e.u(), e.mass(), l, k);
    }
    double operator()(const StableExponent& e) const {
      // Mass-invariant: normalized stable weights do not see the scale.
      return psi_l_gengamma(e.gamma(), 0.0, l, k);
    }
    double operator()(const DirichletModel& e) const {
      return psi_l_dirichlet(e.theta(), l);
    }
    double operator()(const PitmanYorModel& e) const {
      return psi_l_pitman_yor(e.gamma(), e.theta(), l, k);
    }
  };
  return std::visit(Visitor{l, k}, model);
}

MomentValue limit_moment(const MomentRequest& request) {
  const int k = request.order;
  if (k < 1) throw std::domain_error("limit_moment: order must be >= 1");
  MomentValue out;
  out.psi_terms.reserve(k);
  double sum = 0.0;
  for (int l = 1; l <= k; ++l) {
    const double term = psi_l_closed_form(request.model, l, k);
    out.psi_terms.push_back(term);
    if (std::isinf(term)) out.finite = false;
    sum += static_cast<double>(stirling2(k, l)) * term;
  }
  out.value = out.finite ? sum : kInf;
  return out;
}

}  // namespace mtfcost
