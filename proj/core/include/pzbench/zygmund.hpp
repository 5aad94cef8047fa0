#pragma once

// Greedy dyadic-max selection over the shifted blocks
// I_k = [2^k - 1, 2^{k+1} - 2], the even/odd lacunary split of the selected
// frequencies, and the Zygmund-ratio harness for Paley-class multipliers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pzbench/multipliers.hpp"
#include "pzbench/spectra.hpp"
#include "pzbench/torus.hpp"

namespace pzbench::zygmund {

struct SelectedBlock {
  int block = 0;             // k >= 1
  std::int64_t lambda = 0;   // argmax over I_k, ties to the smallest n
  double modulus = 0.0;      // |f^(lambda)| = max over I_k
};

struct GreedySelection {
  std::vector<SelectedBlock> blocks;  // increasing k, blocks met by the support
  double skipped_zero_mode = 0.0;     // |f^(0)|, the contribution of I_0 = {0}

  /// sum_k max_{I_k} |f^|^2
  double energy() const;
};

/// Requires supp(p) in N_0 (see split_by_sign for general supports).
GreedySelection dyadic_max_select(const torus::TrigPoly& p);

/// (n >= 0 part, reflected n < 0 part). The reflection maps n -> -n so both
/// halves are supported in N_0; the zero mode stays with the first.
std::pair<torus::TrigPoly, torus::TrigPoly> split_by_sign(const torus::TrigPoly& p);

struct LacunarySplit {
  spectra::LacunarySeq even;  // lambda_k for even k
  spectra::LacunarySeq odd;   // lambda_k for odd k
};

inline constexpr double kSplitRatioLow = 2.0;
inline constexpr double kSplitRatioHigh = 16.0;

/// Splits the selection by block parity and verifies both halves have
/// ratios in [2, 16]. The upper bound is checked on pairs from blocks k and
/// k + 2; pairs separated by a missing block only need the lower bound.
/// Throws VerificationFailure if either check fails.
LacunarySplit even_odd_split(const GreedySelection& selection);

struct ZygmundReport {
  double lhs = 0.0;    // (sum |m f^|^2)^{1/2}
  double rhs = 0.0;    // 1 + Phi_{1/2}(f)
  double ratio = 0.0;
  std::vector<std::size_t> grid;
  std::string multiplier;
};

/// lhs / (1 + int |f| log^{1/2}(1 + |f|)). Throws PreconditionError if the
/// multiplier's block sums are flagged diverging up to its horizon.
ZygmundReport zygmund_ratio(const torus::TrigPoly& p,
                            const multipliers::MultiplierSeq& m,
                            std::span<const std::size_t> grid);

/// zygmund_ratio with m = 1/sqrt|n| (m(0) = 0), horizon = max(2, deg p).
ZygmundReport inverse_sqrt_zygmund_check(const torus::TrigPoly& p,
                                         std::span<const std::size_t> grid);

}  // namespace pzbench::zygmund
