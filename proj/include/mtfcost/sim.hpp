// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "mtfcost/model.hpp"
#include "mtfcost/rng.hpp"

namespace mtfcost {

/// Unnormalized request weights w_1..w_n with their sum. All weights are
/// strictly positive (samplers clamp underflowed draws to the smallest
/// positive double; the affected items carry request probability below
/// 1e-300 and never influence a finite simulation).
struct WeightVector {
  std::vector<double> weights;
  double total = 0.0;
};

WeightVector make_weight_vector(std::vector<double> weights);

struct SimConfig {
  std::uint64_t replications = 10000;
  std::uint64_t seed = 1;
  int workers = 1;
  std::uint64_t burn_in = 0;  // 0 = default 50 n ln n (chain engine only)
};

/// n independent subordinator increments over spacings 1/n; for
/// Pitman-Yor, the mixing variable Z ~ Gamma(theta/gamma, 1) is drawn
/// once per vector.
WeightVector sample_weights(const Model& model, int n, Rng& rng);
WeightVector sample_weights(const LaplaceExponent& exponent, int n, Rng& rng);

/// One stationary search-cost draw through the exponential embedding:
/// request R = i with probability w_i/total, let T ~ Exp(w_i) be the time
/// since that request, and count the items j != i requested within T,
/// each independently with probability 1 - e^{-w_j T}.
std::uint64_t sample_search_cost_exact(const WeightVector& w, Rng& rng);

/// Brute-force oracle: run the Move-to-Front chain from the identity
/// list for burn_in requests, then return the 0-based position of the
/// next requested item.
std::uint64_t sample_search_cost_chain(const WeightVector& w,
                                       std::uint64_t burn_in, Rng& rng);

std::uint64_t default_burn_in(int n);

/// One draw from the limiting search-cost law: a Poisson draw whose mean
/// V = psi(X+Y) - psi(X) comes from the mixing density
/// -psi''(x+y) e^{-psi(x)}. X = psi_inverse(E) with E ~ Exp(1) and Y has
/// conditional density -psi''(x+y)/psi'(x); the composition collapses to
///   V = (E + mass u^gamma / gamma) (U^{-gamma/(1-gamma)} - 1)
/// for the generalized gamma family and V = -mass log U for the gamma
/// family, which is what this sampler evaluates.
std::uint64_t sample_limit_search_cost(const LaplaceExponent& exponent, Rng& rng);

/// Pitman-Yor limit draw: Z ~ Gamma(theta/gamma, 1), then the conditional
/// generalized gamma limit law. Routes to the exponent overload otherwise.
std::uint64_t sample_limit_search_cost(const Model& model, Rng& rng);

/// The same limit draw through the literal inverse-function recipe,
/// exposing the mixing stages for diagnostics. Given the same (E, U) pair
/// the poisson_mean below equals the V of sample_limit_search_cost.
struct LimitMixingDraw {
  double x;             // psi_inverse(E), marginal density psi'(x) e^{-psi(x)}
  double y;             // conditional density -psi''(x+y)/psi'(x)
  double poisson_mean;  // psi(x+y) - psi(x)
};
LimitMixingDraw sample_limit_mixing(const LaplaceExponent& exponent, Rng& rng);

struct MomentEstimate {
  int order = 1;
  double value = 0.0;
  double std_error = 0.0;
};

/// Raw moments m_j = N^{-1} sum draws^j for j = 1..k with i.i.d. standard
/// errors sqrt((m_{2j} - m_j^2)/N). Throws NumericError when draws are
/// empty or draw^{2k} overflows.
std::vector<MomentEstimate> estimate_moments(
    const std::vector<std::uint64_t>& draws, int k);

enum class FiniteEngine { kExact, kChain };

/// config.replications stationary draws at list size n, a fresh weight
/// vector per draw. Replications are split across config.workers streams
/// and merged by index, so results depend only on (seed, workers).
std::vector<std::uint64_t> run_finite_n(const Model& model, int n,
                                        FiniteEngine engine,
                                        const SimConfig& config);

/// config.replications draws from the limiting law.
std::vector<std::uint64_t> run_limit(const Model& model, const SimConfig& config);

}  // namespace mtfcost
