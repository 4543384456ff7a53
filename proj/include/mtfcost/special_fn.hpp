// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace mtfcost {

/// Triangular table of Stirling numbers of the second kind a_l^(k),
/// the number of partitions of a k-element set into l non-empty blocks.
/// Entries are exact 64-bit integers; max_order is capped at 25 so the
/// largest entry stays below 2^63.
class StirlingTable {
 public:
  explicit StirlingTable(int max_order);

  int max_order() const { return max_order_; }

  /// a_l^(k) for 1 <= l <= k <= max_order(). Throws std::domain_error
  /// outside that range.
  std::int64_t operator()(int k, int l) const;

 private:
  int max_order_;
  std::vector<std::int64_t> entries_;  // row k occupies k slots
};

/// a_l^(k) from a shared table of order 20.
std::int64_t stirling2(int k, int l);

/// Rising factorial (a)_l = a (a+1) ... (a+l-1), with (a)_0 = 1.
double pochhammer(double a, int l);

/// n! as a double (exact up to n = 22, correctly rounded beyond).
double factorial(int n);

/// Upper incomplete gamma Gamma(l+1, x) for integer order l+1 >= 1 and
/// x >= 0, via the exact finite sum e^{-x} sum_{m<=l} (l!/m!) x^m.
double upper_incomplete_gamma_int(int l_plus_1, double x);

/// log Gamma(a) for a > 0 (Lanczos approximation, g = 7, 9 terms).
double log_gamma(double a);

}  // namespace mtfcost
