// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>

namespace mtfcost {

// Laplace exponents psi of the subordinator families used to build the
// request weights. Every exponent satisfies psi(0) = 0, psi' > 0 and
// psi'' < 0 on (0, inf), and psi(s) -> inf as s -> inf (infinite
// activity). The mass field is a time-scaling multiplier: the effective
// exponent is mass * psi_unit.

/// psi(s) = mass * ((u + s)^gamma - u^gamma) / gamma
class GenGammaExponent {
 public:
  GenGammaExponent(double gamma, double u, double mass = 1.0);
  double gamma() const { return gamma_; }
  double u() const { return u_; }
  double mass() const { return mass_; }

 private:
  double gamma_, u_, mass_;
};

/// psi(s) = mass * log(1 + s); mass = theta gives the Dirichlet(theta)
/// weight model.
class GammaExponent {
 public:
  explicit GammaExponent(double mass);
  double mass() const { return mass_; }

 private:
  double mass_;
};

/// psi(s) = mass * s^gamma
class StableExponent {
 public:
  explicit StableExponent(double gamma, double mass = 1.0);
  double gamma() const { return gamma_; }
  double mass() const { return mass_; }

 private:
  double gamma_, mass_;
};

using LaplaceExponent =
    std::variant<GenGammaExponent, GammaExponent, StableExponent>;

double psi(const GenGammaExponent& e, double s);
double psi(const GammaExponent& e, double s);
double psi(const StableExponent& e, double s);
double psi(const LaplaceExponent& e, double s);

double psi_prime(const GenGammaExponent& e, double s);
double psi_prime(const GammaExponent& e, double s);
double psi_prime(const StableExponent& e, double s);
double psi_prime(const LaplaceExponent& e, double s);

double psi_second(const GenGammaExponent& e, double s);
double psi_second(const GammaExponent& e, double s);
double psi_second(const StableExponent& e, double s);
double psi_second(const LaplaceExponent& e, double s);

/// Closed-form inverse of psi: psi(psi_inverse(e)) = e.
double psi_inverse(const GenGammaExponent& e, double value);
double psi_inverse(const GammaExponent& e, double value);
double psi_inverse(const StableExponent& e, double value);
double psi_inverse(const LaplaceExponent& e, double value);

/// Closed-form inverse of psi': psi_prime(psi_prime_inverse(v)) = v for
/// v in the range of psi' on [0, inf). Throws std::domain_error outside.
double psi_prime_inverse(const GenGammaExponent& e, double v);
double psi_prime_inverse(const GammaExponent& e, double v);
double psi_prime_inverse(const StableExponent& e, double v);
double psi_prime_inverse(const LaplaceExponent& e, double v);

/// sup of psi' on (0, inf), i.e. psi'(0+); +inf for the stable family
/// and for generalized gamma with u = 0.
double psi_prime_sup(const LaplaceExponent& e);

/// psi(x + y) - psi(x) evaluated without cancellation.
double psi_increment(const LaplaceExponent& e, double x, double y);

/// Stability index for gamma-indexed families, or 0 for the gamma
/// (Dirichlet) family whose moments are finite at every order.
double stability_index(const LaplaceExponent& e);

}  // namespace mtfcost
