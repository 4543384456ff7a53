// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace mtfcost {

/// xoshiro256++ bit generator with splitmix64 seeding. A (seed, stream)
/// pair identifies an independent stream, so replications can be farmed
/// out to workers with reproducible results regardless of scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();

  /// Uniform draw strictly inside (0, 1).
  double uniform_open();

 private:
  std::uint64_t state_[4];
};

double sample_exponential(Rng& rng, double rate = 1.0);
double sample_normal(Rng& rng);

/// Gamma(shape, 1); valid for every shape > 0 (Marsaglia-Tsang with the
/// uniform-power boost below shape 1). May underflow to 0 for tiny
/// shapes; use sample_log_gamma when the scale matters.
double sample_gamma(Rng& rng, double shape);

/// log of a Gamma(shape, 1) draw, exact in log space for small shapes.
double sample_log_gamma(Rng& rng, double shape);

std::uint64_t sample_poisson(Rng& rng, double mean);

/// Positive gamma-stable draw with Laplace transform e^{-s^gamma}
/// (Kanter's single-uniform single-exponential construction).
double sample_positive_stable(Rng& rng, double gamma);

/// Exponentially tilted stable draw with Laplace transform
/// exp(-lambda [(u+s)^gamma - u^gamma]): rejection from the
/// lambda-scaled stable with acceptance weight e^{-u x}. The loop is
/// capped at 1e7 iterations and throws NumericError beyond.
double sample_tempered_stable(Rng& rng, double gamma, double u, double lambda);

}  // namespace mtfcost
