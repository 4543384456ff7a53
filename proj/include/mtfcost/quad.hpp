// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "mtfcost/errors.hpp"
#include "mtfcost/subordinator.hpp"

namespace mtfcost {

/// Tolerances and work bound for the adaptive quadrature routines.
struct QuadSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod 7/15 on a finite interval.
QuadResult integrate_gk(const std::function<double(double)>& f, double a,
                        double b, const QuadSpec& spec);

/// Adaptive integral over (0, inf) via the substitution v = t/(1-t).
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadSpec& spec);

// Every routine below integrates in the coordinates e = psi(x),
// v = psi(x+y) - psi(x), where the mixing weight exp(-psi(x)) becomes a
// unit exponential in e (truncated at e = 40, tail mass < 1e-17) and the
// Jacobian folds into the closed-form kernels
//   g(e,v) = -psi''(x+y) / (psi'(x) psi'(x+y)),
//   r(e,v) = psi'(x+y) / psi'(x).

/// Limiting Laplace transform of the stationary search cost,
/// phi_S(s) = integral of g(e,v) e^{-e} e^{-(1 - e^{-s}) v}.
double laplace_limit(const LaplaceExponent& exponent, double s,
                     const QuadSpec& spec = {});

/// Same transform with the integrand assembled literally as
/// -psi''(x+y) e^{-psi(x+y)} e^{-e^{-s}[psi(x) - psi(x+y)]}; agrees with
/// laplace_limit up to quadrature error and exists as a cross-check of
/// the two equivalent writings.
double laplace_limit_direct_form(const LaplaceExponent& exponent, double s,
                                 const QuadSpec& spec = {});

/// Psi(l) by quadrature: integral of v^l g(e,v) e^{-e}. Throws
/// std::domain_error when the stability index makes the integral diverge
/// (gamma >= 1/(l+1)).
double psi_l_numeric(const LaplaceExponent& exponent, int l,
                     const QuadSpec& spec = {});

/// Normalization certificate: integral of g(e,v) e^{-e}, equal to 1 for
/// every infinite-activity exponent.
double mixing_density_mass(const LaplaceExponent& exponent,
                           const QuadSpec& spec = {});

/// Finite-n Laplace transform of the stationary search cost for equal
/// spacings 1/n. Guarded to n <= 200.
double laplace_finite_n(const LaplaceExponent& exponent, int n, double s,
                        const QuadSpec& spec = {});

/// Finite-n moment kernel M_{l,n}(0); requires 1 <= l < n.
double finite_n_moment_kernel(const LaplaceExponent& exponent, int n, int l,
                              const QuadSpec& spec = {});

/// k-th finite-n moment, sum_l a_l^(k) M_{l,n}(0).
double finite_n_moment(const LaplaceExponent& exponent, int n, int k,
                       const QuadSpec& spec = {});

/// I_n(l), the uniform-integrability diagnostic; report-only (large or
/// growing values over n flag a divergent regime).
double integrability_diagnostic(const LaplaceExponent& exponent, int n, int l,
                                const QuadSpec& spec = {});

}  // namespace mtfcost
