// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mtfcost/model.hpp"

namespace mtfcost {

// Closed-form limiting moments of the stationary search cost. The k-th
// limiting moment is sum_{l=1}^{k} a_l^(k) Psi(l) with a_l^(k) the
// Stirling numbers of the second kind and Psi(l) the family-specific
// mixed-moment block. Divergence is a value: a divergent Psi(l) or
// moment is reported as +inf, never as an exception.

struct MomentRequest {
  Model model;
  int order = 1;  // k >= 1
};

struct MomentValue {
  bool finite = true;
  double value = 0.0;                // +inf when finite == false
  std::vector<double> psi_terms;     // Psi(1) .. Psi(k)
};

/// Psi(l) for generalized gamma weights:
/// (l!)^2 / ((1/gamma - l - 1)_l) * sum_{m=0}^{l} (u^gamma/gamma)^m / m!
/// when gamma < 1/(k+1), +inf otherwise. The finiteness condition uses
/// the requested moment order k (>= l); pass k = l for a standalone term.
double psi_l_gengamma(double gamma, double u, int l, int k);

/// Same block with the time-scaling multiplier c (effective exponent
/// c * psi); the sum argument becomes q = c u^gamma / gamma.
double psi_l_gengamma_scaled(double gamma, double u, double mass, int l, int k);

/// Psi(l) for Pitman-Yor weights:
/// l! (theta/gamma + 1)_l / ((1/gamma - l - 1)_l) when gamma < 1/(k+1).
double psi_l_pitman_yor(double gamma, double theta, int l, int k);

/// Psi(l) for Dirichlet(theta) weights: l! theta^l, finite at all orders.
double psi_l_dirichlet(double theta, int l);

/// k-th limiting moment for Dirichlet(theta): sum_l a_l^(k) l! theta^l.
double moment_dirichlet(double theta, int k);

/// Psi(l) routed to the family of the request's model.
double psi_l_closed_form(const Model& model, int l, int k);

/// Assembles the k-th limiting moment with its Psi terms.
MomentValue limit_moment(const MomentRequest& request);

/// Largest gamma (exclusive) at which the k-th moment stays finite.
inline double finiteness_threshold(int k) { return 1.0 / (k + 1); }

}  // namespace mtfcost
