#pragma once

// Fourier multiplier sequences M = (m(n)), the dyadic block sums behind the
// Hardy-Littlewood / Duren-Shields criterion, and multiplier application.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pzbench/spectra.hpp"
#include "pzbench/torus.hpp"

namespace pzbench::multipliers {

enum class MultiplierForm { inverse_sqrt, indicator, table, constant };

/// `nonnegative` zeroes the weight on n < 0.
enum class Side { both, nonnegative };

class MultiplierSeq {
 public:
  /// m(n) = 1/sqrt|n|, m(0) = 0.
  static MultiplierSeq inverse_sqrt(std::int64_t horizon, Side side = Side::both);
  static MultiplierSeq indicator(spectra::FrequencySet set, std::int64_t horizon);
  static MultiplierSeq table(std::map<std::int64_t, Complex> values,
                             std::int64_t horizon);
  static MultiplierSeq constant(Complex value, std::int64_t horizon,
                                Side side = Side::both);

  Complex operator()(std::int64_t n) const;

  MultiplierForm form() const noexcept { return form_; }
  Side side() const noexcept { return side_; }
  std::int64_t horizon() const noexcept { return horizon_; }
  double sup_abs() const noexcept { return sup_; }

  /// Frequencies where m may be nonzero, for the finite forms; empty for
  /// inverse_sqrt and constant.
  std::vector<std::int64_t> finite_support() const;

  const spectra::FrequencySet& indicator_set() const noexcept { return set_; }
  const std::map<std::int64_t, Complex>& table_values() const noexcept {
    return table_;
  }
  Complex constant_value() const noexcept { return constant_; }

  std::string describe() const;

 private:
  MultiplierSeq(MultiplierForm form, std::int64_t horizon, Side side);

  MultiplierForm form_;
  std::int64_t horizon_;
  Side side_;
  double sup_ = 0.0;
  spectra::FrequencySet set_{1};
  std::map<std::int64_t, Complex> table_;
  Complex constant_{};
};

/// inclusive: 2^k <= |n| <= 2^{k+1}; half_open: 2^k <= |n| < 2^{k+1}.
enum class BlockConvention { inclusive, half_open };

enum class PaleyVerdict { bounded_up_to_horizon, diverging };

struct PaleyReport {
  std::vector<double> block_sums;  // s_k, k = 0..K
  double sup = 0.0;
  int argsup = 0;
  PaleyVerdict verdict = PaleyVerdict::bounded_up_to_horizon;
  /// s_K / s_{k0} over the growth window, or 0 when s_{k0} = 0.
  double tail_growth = 0.0;
  int window_start = 0;
  BlockConvention convention = BlockConvention::inclusive;
};

/// Block sums s_k = sum_{n in block k} |m(n)|^2 for dyadic N = 2^k.
/// "diverging" fires when s_k strictly increases over the last quarter of
/// the blocks (at least two steps) and grows by >= 4x across that window.
PaleyReport paley_block_sums(const MultiplierSeq& m, int max_block,
                             BlockConvention convention = BlockConvention::inclusive);

/// Largest K with 2^{K+1} <= horizon, or -1.
int max_block_for_horizon(std::int64_t horizon);

/// Coefficients m(n) f^(n). Throws if the support exceeds the horizon.
torus::TrigPoly apply(const MultiplierSeq& m, const torus::TrigPoly& p);

struct H1PaleyRatio {
  double lhs = 0.0;        // weighted l2
  double rhs = 0.0;        // square-function proxy of the H^1 norm
  double ratio = 0.0;
  double zero_mode = 0.0;  // |f^(0)|, excluded from both sides
  bool degenerate = false; // rhs == 0 with lhs > 0
};

H1PaleyRatio h1_paley_ratio(const MultiplierSeq& m, const torus::TrigPoly& p);

const char* to_string(MultiplierForm f);
const char* to_string(PaleyVerdict v);
const char* to_string(BlockConvention c);
const char* to_string(Side s);

}  // namespace pzbench::multipliers
