#include "pzbench/fit.hpp"

#include <cmath>
#include <vector>

#include "pzbench/errors.hpp"

namespace pzbench {

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw PreconditionError("least_squares needs >= 2 paired points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw PreconditionError("least_squares: degenerate abscissae");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

LinearFit log_log_fit(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) throw PreconditionError("log_log_fit: non-positive x");
    lx[i] = std::log(x[i]);
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0.0)) throw PreconditionError("log_log_fit: non-positive y");
    ly[i] = std::log(y[i]);
  }
  return least_squares(lx, ly);
}

}  // namespace pzbench
