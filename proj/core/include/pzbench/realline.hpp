#pragma once

// Compactly supported signals on R sampled on [-L, L), their Fourier
// transforms and Littlewood-Paley blocks, Paley measures, and the probes of
// the H^1 and L log^{1/2} L Paley inequalities on the line.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pzbench/torus.hpp"

namespace pzbench::realline {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
  double length() const noexcept { return hi - lo; }
};

/// Samples f(x_j), x_j = -L + j h, h = 2L / M, j = 0..M-1.
/// M is a power of two >= 16 and the declared support lies in [-L, L].
/// Samples outside the support must vanish.
class CompactSignal {
 public:
  CompactSignal(double half_width, std::vector<Complex> samples, Interval support);

  double half_width() const noexcept { return L_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double spacing() const noexcept { return h_; }
  double x(std::size_t j) const noexcept { return -L_ + static_cast<double>(j) * h_; }
  /// 1 / (4h): the largest |xi| the transform is trusted at.
  double band() const noexcept { return 0.25 / h_; }
  const Interval& support() const noexcept { return support_; }
  std::span<const Complex> samples() const noexcept { return samples_; }
  Complex operator[](std::size_t j) const { return samples_[j]; }

  /// Sample indices whose x_j lies in the declared support.
  std::size_t first() const noexcept { return first_; }
  std::size_t last() const noexcept { return last_; }

  /// h sum f(x_j)
  Complex integral() const;
  /// h sum |f(x_j)|
  double l1_norm() const;

 private:
  double L_;
  double h_;
  std::vector<Complex> samples_;
  Interval support_;
  std::size_t first_ = 0, last_ = 0;
};

/// Samples fn on the grid of (L, M); zero outside `support`.
template <class F>
CompactSignal sample(double L, std::size_t M, Interval support, F&& fn) {
  std::vector<Complex> v(M);
  const double h = 2.0 * L / static_cast<double>(M);
  for (std::size_t j = 0; j < M; ++j) {
    const double x = -L + static_cast<double>(j) * h;
    if (support.contains(x)) v[j] = fn(x);
  }
  return CompactSignal(L, std::move(v), support);
}

struct Transform {
  std::vector<double> xi;
  std::vector<Complex> values;  // h sum f(x_j) exp(-2 pi i xi x_j)
  double error_estimate = 0.0;  // |K| / 12 * max |second difference of f|
  double band = 0.0;
};

/// Throws PreconditionError when some |xi| exceeds the band.
Transform fourier_transform(const CompactSignal& s, std::span<const double> xi);
Complex fourier_transform(const CompactSignal& s, double xi);

/// Inclusive range of Littlewood-Paley block indices.
struct KRange {
  int lo = 0;
  int hi = 0;
};

/// [max(-10, k_res), floor(log2(band)) - 2], where k_res is the lowest
/// block that contains a nonzero DFT frequency m / 2L.
KRange default_k_range(const CompactSignal& s);

/// Inverse DFT of eta(2^-k xi_m) F(xi_m) on the frequencies xi_m = m / 2L.
/// Requires 2^{k+2} <= band. The result keeps the support metadata of the
/// whole window [-L, L].
CompactSignal lp_block(const CompactSignal& s, int k);

/// h sum_j (sum_k |Delta_k f(x_j)|^2)^{1/2}.
double square_function_norm(const CompactSignal& s, KRange range);
double square_function_norm(const CompactSignal& s);

struct Atom {
  double xi = 0.0;
  double weight = 0.0;
};

/// Shape of the density on +-[2^k, 2^{k+1}) in the block representation:
///   uniform:     w / 2^{k+1}   (block mass w)
///   inverse_abs: w / |xi|      (block mass 2 w ln 2)
enum class DensityProfile { uniform, inverse_abs };

struct DensityBlock {
  int k = 0;
  double weight = 0.0;
};

/// Non-negative measure on R given by finitely many atoms or by a density on
/// finitely many dyadic blocks. A declared gap delta means mu([-delta, delta]) = 0.
class PaleyMeasure {
 public:
  enum class Kind { atoms, dyadic_density };

  static PaleyMeasure from_atoms(std::vector<Atom> atoms,
                                 std::optional<double> gap = std::nullopt);
  static PaleyMeasure from_blocks(std::vector<DensityBlock> blocks,
                                  DensityProfile profile,
                                  std::optional<double> gap = std::nullopt);
  /// |xi|^{-1} d xi on the blocks k_lo..k_hi.
  static PaleyMeasure inverse_abs(int k_lo, int k_hi,
                                  std::optional<double> gap = std::nullopt);

  Kind kind() const noexcept { return kind_; }
  DensityProfile profile() const noexcept { return profile_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<DensityBlock>& blocks() const noexcept { return blocks_; }
  std::optional<double> gap() const noexcept { return gap_; }
  bool empty() const noexcept { return atoms_.empty() && blocks_.empty(); }

  /// Density at xi (0 for atomic measures).
  double density(double xi) const;

  /// mu(+-[2^k, 2^{k+1})), by Gauss-Legendre quadrature for densities.
  double block_mass(int k) const;

  /// Smallest and largest block index carrying mass; nullopt if none.
  std::optional<KRange> block_span() const;

 private:
  PaleyMeasure() = default;
  void check_gap() const;

  Kind kind_ = Kind::atoms;
  DensityProfile profile_ = DensityProfile::uniform;
  std::vector<Atom> atoms_;
  std::vector<DensityBlock> blocks_;
  std::optional<double> gap_;
};

const char* to_string(DensityProfile p);

/// Gauss-Legendre rule used for densities (64 nodes per segment).
double integrate_gl(double a, double b, const std::function<double(double)>& fn);

struct PaleySupReport {
  KRange range;
  std::vector<double> masses;  // masses[k - range.lo]
  double sup = 0.0;
  int argsup = 0;
  /// Masses strictly increase (relative step > 1e-9) across the last
  /// quarter of the range, at least two steps.
  bool diverging = false;
};

PaleySupReport paley_sup(const PaleyMeasure& mu, KRange range);
/// Over the measure's own block span.
PaleySupReport paley_sup(const PaleyMeasure& mu);

/// int |f^|^2 d mu restricted to each block k of the measure's span.
/// Throws when mass sits beyond the signal's band.
std::vector<std::pair<int, double>> block_l2_dmu(const CompactSignal& s,
                                                 const PaleyMeasure& mu);
/// int |f^|^2 d mu.
double l2_dmu_squared(const CompactSignal& s, const PaleyMeasure& mu);

struct PaleyProbeReport {
  std::vector<double> ratios;  // ||f^||_{L^2(mu)} / ||S f||_1 per signal
  double max_ratio = 0.0;
  std::size_t argmax = 0;
  double sup_mass = 0.0;
  /// 2 sqrt(sup mu(I)), from |f^| <= ||Delta_{k-1} f||_1 + ||Delta_k f||_1 on I_k.
  double analytic_bound = 0.0;
};

/// Throws unless every signal is mean-zero to 1e-10 relative to its L^1 norm.
PaleyProbeReport paley_inequality_probe(const PaleyMeasure& mu,
                                        std::span<const CompactSignal> corpus);

/// (1 + cos(pi (x - c) / r)) on K = [c - r, c + r], scaled to unit integral
/// on the sample grid.
CompactSignal raised_cosine_bump(double L, std::size_t M, Interval K);

/// g = f - (int f) psi. Throws unless int psi = 1 within 1e-8 and the grids
/// agree; g carries the union of the two supports.
CompactSignal mean_zero_reduction(const CompactSignal& f, const CompactSignal& psi);

/// Seeded sums of one to three smooth modulated bumps inside K.
std::vector<CompactSignal> smooth_corpus(std::size_t count, std::uint64_t seed,
                                         double L, std::size_t M, Interval K);

/// smooth_corpus with every signal passed through mean_zero_reduction
/// against the raised-cosine bump on K.
std::vector<CompactSignal> mean_zero_corpus(std::size_t count, std::uint64_t seed,
                                            double L, std::size_t M, Interval K);

struct RudinCounterexample {
  std::vector<int> chain;           // k_1 < k_2 < ..., k_{j+1} > 5 k_j
  std::vector<double> block_mass;   // mu(I_{k_j})
  std::vector<double> witness;      // int_{I_{k_j}} |f^|^2 d mu
  std::vector<double> normalized;   // witness_j / (j^{-4} mu(I_{k_j}))
  /// Partial sums f_J = sum_{j <= J} j^{-2} eta-check_{k_j} on the given
  /// grid, for as long as 3 * 2^{k_J} stays inside the band.
  std::vector<CompactSignal> partial_sums;
};

/// Picks the chain greedily (k_1 the smallest block with mass >= 1, then the
/// smallest k > 5 k_j with mass >= (j+1)^4) and evaluates the witness series
/// from the closed form f^ = sum j^{-2} eta(2^{-k_j} xi). Throws
/// PreconditionError when fewer than J such blocks exist.
RudinCounterexample rudin_counterexample(const PaleyMeasure& mu, int J, double L,
                                         std::size_t M);

/// The inverse Fourier transform of eta, in closed form.
double eta_check(double x);

struct ZygmundLineReport {
  double lhs = 0.0;  // ||f^||_{L^2(mu)}
  double phi = 0.0;  // h sum_K |f| log^{1/2}(1 + |f|)
  double ratio = 0.0;
};

/// lhs / (1 + phi) over samples in K. Throws without a declared gap.
ZygmundLineReport zygmund_realline_probe(const PaleyMeasure& mu,
                                         const CompactSignal& f, Interval K);

struct LowBlockSweep {
  std::vector<int> k;              // lowest block included, descending
  std::vector<double> cumulative;  // int |f^|^2 |xi|^{-1} over blocks k..k_top
  std::vector<double> increments;  // cumulative[i] - cumulative[i-1]
  double f0 = 0.0;                 // |f^(0)|
};

/// Adds the blocks of |xi|^{-1} d xi one at a time from k_top down to k_low.
LowBlockSweep low_block_sweep(const CompactSignal& f, int k_top, int k_low);

struct ProductSupReport {
  double sup = 0.0;               // max over k, l of mu(I_k) nu(I_l)
  double product_of_sups = 0.0;
  std::pair<int, int> argsup{0, 0};
  bool diverging = false;
};

ProductSupReport product_paley_sup_2d(const PaleyMeasure& mu, KRange mu_range,
                                      const PaleyMeasure& nu, KRange nu_range);

}  // namespace pzbench::realline
