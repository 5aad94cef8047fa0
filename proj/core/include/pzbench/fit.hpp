#pragma once

#include <span>

namespace pzbench {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y ~ slope * x + intercept.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

/// Least squares of log(y) against log(x); all inputs must be positive.
LinearFit log_log_fit(std::span<const double> x, std::span<const double> y);

}  // namespace pzbench
