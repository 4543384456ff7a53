// SPDX-License-Identifier: Apache-2.0
#include "mtfcost/subordinator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mtfcost {

namespace {

constexpr double kGammaMin = 1e-6;
constexpr double kGammaMax = 1.0 - 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_gamma(double gamma) {
  if (!(gamma >= kGammaMin && gamma <= kGammaMax)) {
    throw std::invalid_argument("stability index gamma must lie in [1e-6, 1 - 1e-6]");
  }
}

void check_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("mass must be positive and finite");
  }
}

void check_s(double s) {
  if (!(s >= 0.0)) throw std::domain_error("psi: s must be >= 0");
}

void check_s_positive(double s, bool zero_ok) {
  if (!(s >= 0.0) || (s == 0.0 && !zero_ok)) {
    throw std::domain_error("psi derivative: s = 0 sits on a singularity for this exponent");
  }
}

}  // namespace

GenGammaExponent::GenGammaExponent(double gamma, double u, double mass)
    : gamma_(gamma), u_(u), mass_(mass) {
  check_gamma(gamma);
  check_mass(mass);
  if (!(u >= 0.0) || !std::isfinite(u)) {
    throw std::invalid_argument("GenGammaExponent: u must be >= 0");
  }
}

GammaExponent::GammaExponent(double mass) : mass_(mass) { check_mass(mass); }

StableExponent::StableExponent(double gamma, double mass)
    : gamma_(gamma), mass_(mass) {
  check_gamma(gamma);
  check_mass(mass);
}

// ---- psi ----

double psi(const GenGammaExponent& e, double s) {
  check_s(s);
  const double g = e.gamma(), u = e.u();
  if (u == 0.0) return e.mass() * std::pow(s, g) / g;
  // ((u+s)^g - u^g)/g = u^g expm1(g log1p(s/u)) / g, no cancellation.
  return e.mass() * std::pow(u, g) * std::expm1(g * std::log1p(s / u)) / g;
}

double psi(const GammaExponent& e, double s) {
  check_s(s);
  return e.mass() * std::log1p(s);
}

double psi(const StableExponent& e, double s) {
  check_s(s);
  return e.mass() * std::pow(s, e.gamma());
}

double psi(const LaplaceExponent& e, double s) {
  return std::visit([s](const auto& x) { return psi(x, s); }, e);
}

// ---- psi' ----

double psi_prime(const GenGammaExponent& e, double s) {
  check_s_positive(s, /*zero_ok=*/e.u() > 0.0);
  return e.mass() * std::pow(e.u() + s, e.gamma() - 1.0);
}

double psi_prime(const GammaExponent& e, double s) {
  check_s_positive(s, /*zero_ok=*/true);
  return e.mass() / (1.0 + s);
}

double psi_prime(const StableExponent& e, double s) {
  check_s_positive(s, /*zero_ok=*/false);
  return e.mass() * e.gamma() * std::pow(s, e.gamma() - 1.0);
}

double psi_prime(const LaplaceExponent& e, double s) {
  return std::visit([s](const auto& x) { return psi_prime(x, s); }, e);
}

// ---- psi'' ----

double psi_second(const GenGammaExponent& e, double s) {
  check_s_positive(s, /*zero_ok=*/e.u() > 0.0);
  return e.mass() * (e.gamma() - 1.0) * std::pow(e.u() + s, e.gamma() - 2.0);
}

double psi_second(const GammaExponent& e, double s) {
  check_s_positive(s, /*zero_ok=*/true);
  const double d = 1.0 + s;
  return -e.mass() / (d * d);
}

double psi_second(const StableExponent& e, double s) {
  check_s_positive(s, /*zero_ok=*/false);
  const double g = e.gamma();
  return e.mass() * g * (g - 1.0) * std::pow(s, g - 2.0);
}

double psi_second(const LaplaceExponent& e, double s) {
  return std::visit([s](const auto& x) { return psi_second(x, s); }, e);
}

// ---- psi inverse ----

double psi_inverse(const GenGammaExponent& e, double value) {
  if (!(value >= 0.0)) throw std::domain_error("psi_inverse: value must be >= 0");
  const double g = e.gamma(), u = e.u();
  if (u == 0.0) return std::pow(g * value / e.mass(), 1.0 / g);
  // s = u [ (1 + g v / (mass u^g))^{1/g} - 1 ]
  const double t = g * value / (e.mass() * std::pow(u, g));
  return u * std::expm1(std::log1p(t) / g);
}

double psi_inverse(const GammaExponent& e, double value) {
  if (!(value >= 0.0)) throw std::domain_error("psi_inverse: value must be >= 0");
  return std::expm1(value / e.mass());
}

double psi_inverse(const StableExponent& e, double value) {
  if (!(value >= 0.0)) throw std::domain_error("psi_inverse: value must be >= 0");
  return std::pow(value / e.mass(), 1.0 / e.gamma());
}

double psi_inverse(const LaplaceExponent& e, double value) {
  return std::visit([value](const auto& x) { return psi_inverse(x, value); }, e);
}

// ---- psi' inverse ----

double psi_prime_inverse(const GenGammaExponent& e, double v) {
  const double sup = e.u() > 0.0
                         ? e.mass() * std::pow(e.u(), e.gamma() - 1.0)
                         : kInf;
  if (!(v > 0.0) || v > sup) {
    throw std::domain_error("psi_prime_inverse: v outside the range of psi'");
  }
  return std::pow(v / e.mass(), 1.0 / (e.gamma() - 1.0)) - e.u();
}

double psi_prime_inverse(const GammaExponent& e, double v) {
  if (!(v > 0.0) || v > e.mass()) {
    throw std::domain_error("psi_prime_inverse: v outside the range of psi'");
  }
  return e.mass() / v - 1.0;
}

double psi_prime_inverse(const StableExponent& e, double v) {
  if (!(v > 0.0)) {
    throw std::domain_error("psi_prime_inverse: v outside the range of psi'");
  }
  return std::pow(v / (e.mass() * e.gamma()), 1.0 / (e.gamma() - 1.0));
}

double psi_prime_inverse(const LaplaceExponent& e, double v) {
  return std::visit([v](const auto& x) { return psi_prime_inverse(x, v); }, e);
}

double psi_prime_sup(const LaplaceExponent& e) {
  struct Visitor {
    double operator()(const GenGammaExponent& x) const {
      return x.u() > 0.0 ? x.mass() * std::pow(x.u(), x.gamma() - 1.0) : kInf;
    }
    double operator()(const GammaExponent& x) const { return x.mass(); }
    double operator()(const StableExponent&) const { return kInf; }
  };
  return std::visit(Visitor{}, e);
}

double psi_increment(const LaplaceExponent& e, double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0)) {
    throw std::domain_error("psi_increment: x and y must be >= 0");
  }
  struct Visitor {
    double x, y;
    double operator()(const GenGammaExponent& g) const {
      const double base = g.u() + x;
      if (base == 0.0) return psi(g, y);
      return g.mass() * std::pow(base, g.gamma()) *
             std::expm1(g.gamma() * std::log1p(y / base)) / g.gamma();
    }
    double operator()(const GammaExponent& g) const {
      return g.mass() * std::log1p(y / (1.0 + x));
    }
    double operator()(const StableExponent& g) const {
      if (x == 0.0) return psi(g, y);
      return g.mass() * std::pow(x, g.gamma()) *
             std::expm1(g.gamma() * std::log1p(y / x));
    }
  };
  return std::visit(Visitor{x, y}, e);
}

double stability_index(const LaplaceExponent& e) {
  struct Visitor {
    double operator()(const GenGammaExponent& x) const { return x.gamma(); }
    double operator()(const GammaExponent&) const { return 0.0; }
    double operator()(const StableExponent& x) const { return x.gamma(); }
  };
  return std::visit(Visitor{}, e);
}

}  // namespace mtfcost
