// SPDX-License-Identifier: Apache-2.0
#include "mtfcost/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "mtfcost/errors.hpp"

namespace mtfcost {

namespace {

constexpr double kMinWeight = std::numeric_limits<double>::min();

double clamp_positive(double w) { return w > kMinWeight ? w : kMinWeight; }

int pick_index(const WeightVector& w, Rng& rng) {
  const double target = rng.uniform_open() * w.total;
  double acc = 0.0;
  const int n = static_cast<int>(w.weights.size());
  for (int i = 0; i < n - 1; ++i) {
    acc += w.weights[i];
    if (target <= acc) return i;
  }
  return n - 1;
}

}  // namespace

WeightVector make_weight_vector(std::vector<double> weights) {
  if (weights.size() < 2) {
    throw std::invalid_argument("WeightVector: need at least two weights");
  }
  long double total = 0.0L;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("WeightVector: weights must be positive and finite");
    }
    total += w;
  }
  return WeightVector{std::move(weights), static_cast<double>(total)};
}

WeightVector sample_weights(const Model& model, int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("sample_weights: n must be >= 2");
  struct Sampler {
    int n;
    Rng& rng;
    std::vector<double> operator()(const GenGammaExponent& e) const {
      std::vector<double> w(n);
      const double lambda = e.mass() / (e.gamma() * n);
      for (auto& x : w) {
        x = clamp_positive(sample_tempered_stable(rng, e.gamma(), e.u(), lambda));
      }
      return w;
    }
    std::vector<double> operator()(const StableExponent& e) const {
      std::vector<double> w(n);
      const double scale = std::pow(e.mass() / n, 1.0 / e.gamma());
      for (auto& x : w) {
        x = clamp_positive(scale * sample_positive_stable(rng, e.gamma()));
      }
      return w;
    }
    std::vector<double> operator()(const DirichletModel& m) const {
      std::vector<double> w(n);
      const double shape = m.theta() / n;
      for (auto& x : w) {
        x = clamp_positive(std::exp(sample_log_gamma(rng, shape)));
      }
      return w;
    }
    std::vector<double> operator()(const PitmanYorModel& m) const {
      const double z = clamp_positive(
          std::exp(sample_log_gamma(rng, m.theta() / m.gamma())));
      // Conditional on Z = z the increments are generalized gamma with
      // u = 1 and mass z gamma, i.e. tilted stable with lambda = z/n.
      std::vector<double> w(n);
      for (auto& x : w) {
        x = clamp_positive(sample_tempered_stable(rng, m.gamma(), 1.0, z / n));
      }
      return w;
    }
  };
  return make_weight_vector(std::visit(Sampler{n, rng}, model));
}

WeightVector sample_weights(const LaplaceExponent& exponent, int n, Rng& rng) {
  struct ToModel {
    Model operator()(const GenGammaExponent& e) const { return e; }
    Model operator()(const StableExponent& e) const { return e; }
    Model operator()(const GammaExponent& e) const {
      return DirichletModel(e.mass());
    }
  };
  return sample_weights(std::visit(ToModel{}, exponent), n, rng);
}

std::uint64_t sample_search_cost_exact(const WeightVector& w, Rng& rng) {
  const int i = pick_index(w, rng);
  const double t = sample_exponential(rng, w.weights[i]);
  std::uint64_t cost = 0;
  const int n = static_cast<int>(w.weights.size());
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const double p = -std::expm1(-w.weights[j] * t);
    if (rng.uniform_open() < p) ++cost;
  }
  return cost;
}

std::uint64_t default_burn_in(int n) {
  return static_cast<std::uint64_t>(
      std::ceil(50.0 * n * std::log(std::max(n, 2))));
}

std::uint64_t sample_search_cost_chain(const WeightVector& w,
                                       std::uint64_t burn_in, Rng& rng) {
  if (burn_in < 1) throw std::invalid_argument("chain sampler: burn_in must be >= 1");
  const int n = static_cast<int>(w.weights.size());
  std::vector<int> list(n);       // list[k] = item at depth k
  std::iota(list.begin(), list.end(), 0);
  std::vector<int> position(n);   // position[item] = depth
  std::iota(position.begin(), position.end(), 0);
  auto request = [&](int item) -> int {
    const int pos = position[item];
    for (int k = pos; k > 0; --k) {
      list[k] = list[k - 1];
      position[list[k]] = k;
    }
    list[0] = item;
    position[item] = 0;
    return pos;
  };
  for (std::uint64_t t = 0; t < burn_in; ++t) request(pick_index(w, rng));
  return static_cast<std::uint64_t>(request(pick_index(w, rng)));
}

namespace {

// V = psi(X+Y) - psi(X) under the mixing law, reduced to closed form.
double sample_mixed_poisson_mean(const LaplaceExponent& exponent, Rng& rng) {
  const double e = sample_exponential(rng);
  const double u = rng.uniform_open();
  struct Visitor {
    double e, u;
    double operator()(const GenGammaExponent& x) const {
      const double q = x.mass() * std::pow(x.u(), x.gamma()) / x.gamma();
      const double growth = std::expm1(-x.gamma() / (1.0 - x.gamma()) * std::log(u));
      return (e + q) * growth;
    }
    double operator()(const StableExponent& x) const {
      return e * std::expm1(-x.gamma() / (1.0 - x.gamma()) * std::log(u));
    }
    double operator()(const GammaExponent& x) const {
      return -x.mass() * std::log(u);
    }
  };
  return std::visit(Visitor{e, u}, exponent);
}

}  // namespace

std::uint64_t sample_limit_search_cost(const LaplaceExponent& exponent, Rng& rng) {
  return sample_poisson(rng, sample_mixed_poisson_mean(exponent, rng));
}

std::uint64_t sample_limit_search_cost(const Model& model, Rng& rng) {
  if (const auto* py = std::get_if<PitmanYorModel>(&model)) {
    const double z = clamp_positive(
        std::exp(sample_log_gamma(rng, py->theta() / py->gamma())));
    return sample_limit_search_cost(
        LaplaceExponent(py->conditional_exponent(z)), rng);
  }
  return sample_limit_search_cost(*model_exponent(model), rng);
}

LimitMixingDraw sample_limit_mixing(const LaplaceExponent& exponent, Rng& rng) {
  const double e = sample_exponential(rng);
  const double u = rng.uniform_open();
  const double x = psi_inverse(exponent, e);
  const double y = psi_prime_inverse(exponent, u * psi_prime(exponent, x)) - x;
  return {x, y, psi_increment(exponent, x, y)};
}

std::vector<MomentEstimate> estimate_moments(
    const std::vector<std::uint64_t>& draws, int k) {
  if (draws.empty()) throw NumericError("estimate_moments: no draws");
  if (k < 1) throw std::invalid_argument("estimate_moments: k must be >= 1");
  const std::uint64_t max_draw = *std::max_element(draws.begin(), draws.end());
  if (max_draw > 1 &&
      2.0 * k * std::log(static_cast<double>(max_draw)) > 708.0) {
    throw NumericError("estimate_moments: draw^2k overflows double");
  }
  const double n = static_cast<double>(draws.size());
  std::vector<long double> raw(2 * k + 1, 0.0L);
  for (const std::uint64_t d : draws) {
    const long double x = static_cast<long double>(d);
    long double p = 1.0L;
    for (int j = 1; j <= 2 * k; ++j) {
      p *= x;
      raw[j] += p;
    }
  }
  std::vector<MomentEstimate> out;
  out.reserve(k);
  for (int j = 1; j <= k; ++j) {
    const double mj = static_cast<double>(raw[j] / n);
    const double m2j = static_cast<double>(raw[2 * j] / n);
    const double var = std::max(0.0, m2j - mj * mj);
    out.push_back({j, mj, std::sqrt(var / n)});
  }
  return out;
}

namespace {

template <class DrawFn>
std::vector<std::uint64_t> run_replications(const SimConfig& config,
                                            const DrawFn& draw) {
  if (config.replications < 1) {
    throw std::invalid_argument("replications must be >= 1");
  }
  if (config.workers < 1) {
    throw std::invalid_argument("workers must be >= 1");
  }
  const std::uint64_t n = config.replications;
  std::vector<std::uint64_t> draws(n);
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(config.workers), n));
  auto work = [&](int w) {
    const std::uint64_t lo = n * w / workers;
    const std::uint64_t hi = n * (w + 1) / workers;
    Rng rng(config.seed, static_cast<std::uint64_t>(w));
    for (std::uint64_t i = lo; i < hi; ++i) draws[i] = draw(rng);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return draws;
}

}  // namespace

std::vector<std::uint64_t> run_finite_n(const Model& model, int n,
                                        FiniteEngine engine,
                                        const SimConfig& config) {
  const std::uint64_t burn_in =
      config.burn_in > 0 ? config.burn_in : default_burn_in(n);
  return run_replications(config, [&](Rng& rng) {
    const WeightVector w = sample_weights(model, n, rng);
    return engine == FiniteEngine::kExact
               ? sample_search_cost_exact(w, rng)
               : sample_search_cost_chain(w, burn_in, rng);
  });
}

std::vector<std::uint64_t> run_limit(const Model& model, const SimConfig& config) {
  return run_replications(config,
                          [&](Rng& rng) { return sample_limit_search_cost(model, rng); });
}

}  // namespace mtfcost
