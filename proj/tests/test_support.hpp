// SPDX-License-Identifier: Apache-2.0
// Independent oracles used by the tests: a plain adaptive Simpson
// integrator, brute-force combinatorial enumerations, and the exact
// stationary law of the Move-to-Front chain on tiny lists. Nothing here
// touches the library's quadrature or sampler code paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace testsupport {

// ---- adaptive Simpson ----

inline double simpson_panel(const std::function<double(double)>& f, double a,
                            double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_panel(f, a, m, fa, flm, fm);
  const double right = simpson_panel(f, m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12, int depth = 48) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson_panel(f, a, b, fa, fm, fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// ---- set partitions ----

/// Number of partitions of {0..k-1} into exactly l non-empty blocks, by
/// direct enumeration of block assignments in restricted-growth form.
inline std::int64_t count_partitions(int k, int l) {
  std::vector<int> assign(k, 0);
  std::int64_t count = 0;
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == k) {
      if (used == l) ++count;
      return;
    }
    for (int b = 0; b <= used && b < l; ++b) {
      assign[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return count;
}

/// Bell numbers via the Bell-triangle recurrence (independent of the
/// Stirling recurrence).
inline std::vector<std::int64_t> bell_numbers(int kmax) {
  std::vector<std::int64_t> bell{1};  // B_0
  std::vector<std::int64_t> row{1};
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::int64_t> next(row.size() + 1);
    next[0] = row.back();
    for (std::size_t i = 0; i < row.size(); ++i) next[i + 1] = next[i] + row[i];
    bell.push_back(next[0]);
    row = std::move(next);
  }
  return bell;  // bell[k] = B_k, so B_k = sum_l S(k,l) for k >= 1
}

// ---- Move-to-Front stationary law on tiny lists ----

struct TinyLawMoments {
  double mean = 0.0;
  double second = 0.0;
};

/// Exact stationary search-cost moments by enumerating every permutation
/// sigma with P(sigma) = prod p_{sigma_i} / (1 - p_{sigma_1} - ... ).
inline TinyLawMoments enumerate_stationary_moments(std::vector<double> weights) {
  const int n = static_cast<int>(weights.size());
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<double> p(weights.size());
  for (int i = 0; i < n; ++i) p[i] = weights[i] / total;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  TinyLawMoments out;
  do {
    double prob = 1.0;
    double remaining = 1.0;
    for (int pos = 0; pos < n; ++pos) {
      prob *= p[perm[pos]] / remaining;
      remaining -= p[perm[pos]];
    }
    for (int pos = 0; pos < n; ++pos) {
      const double w = prob * p[perm[pos]];
      out.mean += w * pos;
      out.second += w * pos * pos;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// E[S_n] = sum_{i != j} p_i p_j / (p_i + p_j), valid at every n.
inline double mean_search_cost_formula(const std::vector<double>& weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  double mean = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (i == j) continue;
      const double pi = weights[i] / total, pj = weights[j] / total;
      mean += pi * pj / (pi + pj);
    }
  }
  return mean;
}

// ---- Kolmogorov-Smirnov ----

/// One-sample KS statistic against a continuous CDF.
inline double ks_statistic(std::vector<double> draws,
                           const std::function<double(double)>& cdf) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double f = cdf(draws[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

}  // namespace testsupport
