// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mtfcost {

/// A numerical routine failed to deliver a result at the requested
/// accuracy (non-convergent quadrature, sampler loop cap, overflow
/// guard). Carries the best partial estimate when one exists.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double partial, double error_estimate)
      : std::runtime_error(what), partial_(partial), error_(error_estimate) {}
  explicit NumericError(const std::string& what)
      : NumericError(what, 0.0, 0.0) {}
  double partial() const { return partial_; }
  double error_estimate() const { return error_; }

 private:
  double partial_;
  double error_;
};

}  // namespace mtfcost
