#include "pzbench/window.hpp"

#include <cmath>

namespace pzbench {

double dyadic_window(double xi) noexcept {
  const double a = std::abs(xi);
  if (a <= 1.0 || a >= 3.0) return 0.0;
  if (a < 1.5) return 2.0 * (a - 1.0);
  if (a <= 2.0) return 1.0;
  return 3.0 - a;
}

double dyadic_window(int k, double xi) noexcept {
  return dyadic_window(std::ldexp(xi, -k));
}

double dyadic_window_partition(double xi, int k_lo, int k_hi) noexcept {
  double s = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) s += dyadic_window(k, xi);
  return s;
}

}  // namespace pzbench
