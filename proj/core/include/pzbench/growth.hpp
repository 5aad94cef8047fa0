#pragma once

// Lower-bound probes of Lambda(p) constants and Sidon constants over random
// and optimised coefficient ensembles, and the E-matrix algebra used in the
// iterated multi-dimensional argument.

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pzbench/multipliers.hpp"
#include "pzbench/spectra.hpp"
#include "pzbench/torus.hpp"

namespace pzbench::growth {

enum class EnsembleKind { random_signs, steinhaus, flat, phase_ascent };

const char* to_string(EnsembleKind k);
EnsembleKind ensemble_kind_from_string(const std::string& s);

/// Every estimate here is a maximum over the ensemble's trials, so it bounds
/// the true supremum from below.
///
/// phase_ascent starts trial 0 from the flat polynomial and later trials
/// from Steinhaus draws, then runs the coordinate phase search on each.
struct Ensemble {
  EnsembleKind kind = EnsembleKind::random_signs;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
};

/// Generator for trial t of a run with the given master seed.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

/// Coefficients on the spectrum for one trial (before any phase search);
/// every coefficient has modulus 1.
torus::TrigPoly draw(const spectra::FrequencySet& spectrum, EnsembleKind kind,
                     std::uint64_t seed, std::size_t trial);

struct PhaseAscentOptions {
  int sweeps = 3;
  int candidates = 16;  // equally spaced phases tried per coordinate
};

/// Cyclic coordinate search over coefficient phases that maximises
/// target(grid values). Coordinates are visited in increasing frequency
/// order; a candidate replaces the current phase only on strict improvement.
torus::TrigPoly phase_ascent(
    const torus::TrigPoly& start, std::span<const std::size_t> grid,
    const std::function<double(std::span<const Complex>)>& target,
    PhaseAscentOptions options = {});

/// Per-axis grid on which the rectangle rule is exact for |f|^p with p
/// even: M_i > (p/2) (max n_i - min n_i), and at least synthesize()'s floor.
std::vector<std::size_t> exact_grid(const torus::TrigPoly& p, int even_p);

inline constexpr int kMaxEvenP = 64;

/// Throws unless p is an even integer in [2, 64].
int checked_even_p(double p);

struct LambdaPResult {
  double ratio = 0.0;  // max over trials of ||f||_p / ||f||_2
  std::size_t best_trial = 0;
  std::vector<std::size_t> grid;
};

LambdaPResult lambda_p_ratio(const spectra::FrequencySet& spectrum, double p,
                             const Ensemble& ensemble);

/// ||f||_p / ||f||_2 for each even p, read from one synthesis on the grid
/// exact for the largest p.
std::vector<double> lp_ratios(const torus::TrigPoly& f, std::span<const int> p_grid);

inline constexpr std::size_t kDefaultMaxGridPoints = std::size_t{1} << 24;

struct GrowthReport {
  std::string spectrum;  // short descriptor
  std::size_t spectrum_size = 0;
  Ensemble ensemble;
  std::vector<int> p_grid;
  std::vector<double> ratios;  // best ratio per p
  double exponent = 0.0;
  double intercept = 0.0;
  bool degenerate = false;  // all ratios 1, exponent forced to 0
  std::vector<std::size_t> grid;
};

/// Fits log(ratio) against log(p). Each trial is synthesised once on the
/// grid exact for the largest p and every p is read from those samples.
GrowthReport growth_exponent(const spectra::FrequencySet& spectrum,
                             std::span<const int> p_grid,
                             const Ensemble& ensemble,
                             std::size_t max_grid_points = kDefaultMaxGridPoints);

/// growth_exponent on the product of 1D spectra. Throws CapExceeded when
/// the product grid would exceed max_grid_points.
GrowthReport tensor_growth(std::span<const spectra::FrequencySet> factors,
                           std::span<const int> p_grid, const Ensemble& ensemble,
                           std::size_t max_grid_points = kDefaultMaxGridPoints);

/// E_{n,n'} = sum_m f^(m, n) conj f^(m, n') where n runs over the
/// coordinates along `axis` and m over the other one.
struct EMatrix {
  Eigen::MatrixXcd entries;
  std::vector<std::int64_t> index;  // spectrum along `axis`, increasing

  double trace() const;
  double frobenius_squared() const;
};

EMatrix e_matrix(const torus::TrigPoly& f, std::size_t axis = 1);

struct CauchySchwarzVerdict {
  double lhs = 0.0;  // sum |E|^2
  double rhs = 0.0;  // ||f||_2^4
  double slack() const { return rhs - lhs; }
};

inline constexpr double kCauchySchwarzTolerance = 1e-10;

/// Throws VerificationFailure if sum |E|^2 > ||f||_2^4 (1 + 1e-10).
CauchySchwarzVerdict cauchy_schwarz_check(const EMatrix& e,
                                          const torus::TrigPoly& f);

struct OffDiagonalSplit {
  Eigen::MatrixXcd diag, upper, lower;
};

/// Splits E by the position of n and n' in `order`, a permutation of
/// e.index: upper holds pos(n) < pos(n'), lower pos(n) > pos(n').
OffDiagonalSplit offdiagonal_split(const EMatrix& e,
                                   std::span<const std::int64_t> order);

inline constexpr std::size_t kSidonOversample = 16;

/// sum |m(n) f^(n)| / (grid maximum of |f|). The grid maximum never exceeds
/// the true sup norm, so this can overshoot the true ratio by the grid
/// defect only.
double sidon_ratio(const multipliers::MultiplierSeq& m, const torus::TrigPoly& f,
                   std::size_t oversample = kSidonOversample);

struct SidonBound {
  double value = 0.0;
  std::string best;  // "trial <t>" or "phase-ascent"
  std::size_t grid = 0;
};

/// Max of sidon_ratio over polynomials with coefficients |m(n)| u_n, u_n
/// drawn from the ensemble, plus one phase-ascent refinement from the flat
/// start that minimises the grid sup norm.
SidonBound sidon_lower_bound(const multipliers::MultiplierSeq& m,
                             const spectra::FrequencySet& spectrum,
                             const Ensemble& ensemble,
                             std::size_t oversample = kSidonOversample);

}  // namespace pzbench::growth
