// SPDX-License-Identifier: Apache-2.0
#include "mtfcost/special_fn.hpp"

#include <cmath>
#include <stdexcept>

namespace mtfcost {

namespace {
// Bell(25) = 4.64e18 < 2^63; one more row would overflow int64.
constexpr int kMaxStirlingOrder = 25;
}  // namespace

StirlingTable::StirlingTable(int max_order) : max_order_(max_order) {
  if (max_order < 1 || max_order > kMaxStirlingOrder) {
    throw std::invalid_argument("StirlingTable: max_order must be in [1, 25]");
  }
  entries_.resize(static_cast<std::size_t>(max_order) * (max_order + 1) / 2);
  auto at = [this](int k, int l) -> std::int64_t& {
    return entries_[static_cast<std::size_t>(k - 1) * k / 2 + (l - 1)];
  };
  at(1, 1) = 1;
  for (int k = 1; k < max_order; ++k) {
    for (int l = 1; l <= k + 1; ++l) {
      // a_l^(k+1) = l a_l^(k) + a_{l-1}^(k)
      std::int64_t v = 0;
      if (l <= k) v += l * at(k, l);
      if (l > 1) v += at(k, l - 1);
      at(k + 1, l) = v;
    }
  }
}

std::int64_t StirlingTable::operator()(int k, int l) const {
  if (k < 1 || k > max_order_ || l < 1 || l > k) {
    throw std::domain_error("stirling2: need 1 <= l <= k <= max_order");
  }
  return entries_[static_cast<std::size_t>(k - 1) * k / 2 + (l - 1)];
}

std::int64_t stirling2(int k, int l) {
  static const StirlingTable table(20);
  return table(k, l);
}

double pochhammer(double a, int l) {
  if (l < 0) throw std::domain_error("pochhammer: l must be >= 0");
  double p = 1.0;
  for (int i = 0; i < l; ++i) p *= a + i;
  return p;
}

double factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: n must be >= 0");
  double p = 1.0;
  for (int i = 2; i <= n; ++i) p *= i;
  return p;
}

double upper_incomplete_gamma_int(int l_plus_1, double x) {
  if (l_plus_1 < 1) {
    throw std::domain_error("upper_incomplete_gamma_int: order must be >= 1");
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("upper_incomplete_gamma_int: x must be >= 0");
  }
  const int l = l_plus_1 - 1;
  // Gamma(l+1, x) = e^{-x} l! sum_{m=0}^{l} x^m/m!, all terms positive.
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m <= l; ++m) {
    term *= x / m;
    sum += term;
  }
  return std::exp(-x) * factorial(l) * sum;
}

double log_gamma(double a) {
  if (!(a > 0.0)) throw std::domain_error("log_gamma: a must be > 0");
  // Lanczos, g = 7, 9 coefficients.
  static const double kCoeff[] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (a < 0.5) {
    // Reflection; only reached for cross-check usage, a in (0, 0.5).
    return std::log(M_PI / std::sin(M_PI * a)) - log_gamma(1.0 - a);
  }
  const double z = a - 1.0;
  double x = kCoeff[0];
  for (int i = 1; i < 9; ++i) x += kCoeff[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace mtfcost
