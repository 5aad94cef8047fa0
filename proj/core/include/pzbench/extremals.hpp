#pragma once

// Fejer and de la Vallee Poussin kernels, the L log^r L sharpness sweep,
// and the Ingham series whose weight 1/sqrt|n| is not a Sidon weight.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pzbench/torus.hpp"

namespace pzbench::extremals {

/// K_n with coefficients 1 - |j| / (n + 1) for |j| <= n.
torus::TrigPoly fejer(std::int64_t n);

/// V_{2^N} = 2 K_{2^{N+1} - 1} - K_{2^N - 1}. Flat (= 1) on |n| <= 2^N.
torus::TrigPoly vallee_poussin(int N);

struct SharpnessRow {
  int N = 0;
  std::size_t grid = 0;
  double l = 0.0;               // (sum_{n != 0} |V^(n)|^2 / |n|)^{1/2}
  std::vector<double> phi;      // Phi_r(V), one per requested r
  std::vector<double> ratio;    // l / (1 + phi)
};

struct SharpnessTable {
  std::vector<double> r;
  std::vector<SharpnessRow> rows;
  double l_slope = 0.0;              // log l against log N
  std::vector<double> phi_slope;     // log phi_r against log N
  std::vector<double> ratio_spread;  // max / min of each ratio series
  std::vector<double> ratio_growth;  // last / first of each ratio series
};

inline constexpr std::size_t kSharpnessOversample = 8;

/// Rows for N = n_min..n_max on grids of oversample * 2^{N+1} points.
/// Throws GridTooSmall when oversample < 8.
SharpnessTable sharpness_experiment(int n_min, int n_max,
                                    std::span<const double> r,
                                    std::size_t oversample = kSharpnessOversample);

struct InghamParams {
  double gamma = 0.5;
  double c = 0.8;
};

/// Throws unless 0 < gamma < 1 and (gamma + 1) / 2 < c <= 1.
void validate(const InghamParams& params);

/// exp(2 pi i n (ln n)^gamma) / (sqrt(n) (ln n)^c).
Complex ingham_coefficient(const InghamParams& params, std::int64_t n);

/// S_M: the coefficients above for 2 <= n <= M (M >= 3).
torus::TrigPoly ingham_partial_sum(const InghamParams& params, std::int64_t M);

struct InghamTail {
  std::int64_t M = 0;
  std::size_t grid = 0;
  double sup = 0.0;  // grid maximum of |S_{2M} - S_M|
};

std::vector<InghamTail> ingham_tails(const InghamParams& params,
                                     std::span<const std::int64_t> horizons,
                                     std::size_t oversample = 8);

struct SidonWeightDivergence {
  double c = 0.0;
  std::int64_t M = 0;
  double partial_sum = 0.0;        // sum_{2 <= n <= M} 1 / (n (ln n)^c)
  double integral_estimate = 0.0;  // int_2^M dx / (x (ln x)^c)
  double relative_gap() const;     // |partial - integral| / integral
};

SidonWeightDivergence sidon_weight_divergence(double c, std::int64_t M);

}  // namespace pzbench::extremals
