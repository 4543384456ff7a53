// SPDX-License-Identifier: Apache-2.0
#include "mtfcost/rng.hpp"

#include <cmath>

#include "mtfcost/errors.hpp"
#include "mtfcost/special_fn.hpp"

namespace mtfcost {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed ^ (0xd1342543de82ef95ULL * (stream + 1));
  for (auto& word : state_) word = splitmix64(x);
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform_open() {
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double sample_exponential(Rng& rng, double rate) {
  return -std::log(rng.uniform_open()) / rate;
}

double sample_normal(Rng& rng) {
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform_open();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

namespace {

// Marsaglia-Tsang squeeze, shape >= 1.
double gamma_mt(Rng& rng, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_log_gamma(Rng& rng, double shape) {
  if (!(shape > 0.0)) throw NumericError("sample_log_gamma: shape must be > 0");
  if (shape >= 1.0) return std::log(gamma_mt(rng, shape));
  const double boosted = gamma_mt(rng, shape + 1.0);
  return std::log(boosted) + std::log(rng.uniform_open()) / shape;
}

double sample_gamma(Rng& rng, double shape) {
  if (!(shape > 0.0)) throw NumericError("sample_gamma: shape must be > 0");
  if (shape >= 1.0) return gamma_mt(rng, shape);
  return std::exp(sample_log_gamma(rng, shape));
}

std::uint64_t sample_poisson(Rng& rng, double mean) {
  if (!(mean >= 0.0)) throw NumericError("sample_poisson: mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    // Multiplication method.
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = rng.uniform_open();
    while (p > limit) {
      ++k;
      p *= rng.uniform_open();
    }
    return k;
  }
  // Hoermann's PTRS transformed rejection, valid for mean >= 10.
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    const double u = rng.uniform_open() - 0.5;
    const double v = rng.uniform_open();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * log_mean - mean - log_gamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

double sample_positive_stable(Rng& rng, double gamma) {
  // Kanter: S = (A(U)/E)^{(1-gamma)/gamma} with
  // A(u) = sin(g pi u)^{g/(1-g)} sin((1-g) pi u) / sin(pi u)^{1/(1-g)}.
  const double u = rng.uniform_open();
  const double e = sample_exponential(rng);
  const double om = 1.0 - gamma;
  const double log_a = (gamma / om) * std::log(std::sin(gamma * M_PI * u)) +
                       std::log(std::sin(om * M_PI * u)) -
                       (1.0 / om) * std::log(std::sin(M_PI * u));
  return std::exp((om / gamma) * (log_a - std::log(e)));
}

double sample_tempered_stable(Rng& rng, double gamma, double u, double lambda) {
  const double scale = std::pow(lambda, 1.0 / gamma);
  if (u == 0.0) return scale * sample_positive_stable(rng, gamma);
  constexpr long kLoopCap = 10000000L;
  for (long i = 0; i < kLoopCap; ++i) {
    const double x = scale * sample_positive_stable(rng, gamma);
    if (std::log(rng.uniform_open()) < -u * x) return x;
  }
  throw NumericError("sample_tempered_stable: rejection loop cap reached");
}

}  // namespace mtfcost
