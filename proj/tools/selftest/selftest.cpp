#include "selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pzbench/extremals.hpp"
#include "pzbench/growth.hpp"
#include "pzbench/multipliers.hpp"
#include "pzbench/realline.hpp"
#include "pzbench/spectra.hpp"
#include "pzbench/torus.hpp"
#include "pzbench/window.hpp"
#include "pzbench/zygmund.hpp"
#include "snapshots.hpp"

namespace pzbench::selftest {
namespace {

using torus::TrigPoly;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double uniform(std::mt19937_64& rng, double a, double b) {
  return a + (b - a) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex random_coefficient(std::mt19937_64& rng) {
  return {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
}

TrigPoly random_poly_1d(std::mt19937_64& rng, std::int64_t max_degree) {
  const auto d = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(max_degree));
  TrigPoly p(1);
  for (std::int64_t n = -d; n <= d; ++n) {
    if (rng() & 1) p.set(n, random_coefficient(rng));
  }
  p.set(d, random_coefficient(rng) + Complex(2.0, 0.0));
  return p;
}

TrigPoly random_poly_2d(std::mt19937_64& rng, std::int64_t max_degree) {
  const auto d = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(max_degree));
  TrigPoly p(2);
  for (std::int64_t a = -d; a <= d; ++a) {
    for (std::int64_t b = -d; b <= d; ++b) {
      if (rng() % 4 == 0) p.set({a, b}, random_coefficient(rng));
    }
  }
  p.set({d, -d}, Complex(3.0, 0.0));
  return p;
}

double max_coefficient_gap(const TrigPoly& a, const TrigPoly& b) {
  double gap = 0.0;
  for (const auto& [n, c] : a - b) gap = std::max(gap, std::abs(c));
  return gap;
}

// ---------------------------------------------------------------------------

std::vector<Check> transform_exactness() {
  double worst_trip = 0.0, worst_parseval = 0.0;
  for (std::size_t dim : {1u, 2u}) {
    std::mt19937_64 rng(1000 + dim);
    for (int i = 0; i < 100; ++i) {
      const TrigPoly p = dim == 1 ? random_poly_1d(rng, 512) : random_poly_2d(rng, 64);
      const auto s = torus::synthesize(p, torus::minimum_grid(p));
      const double l2 = p.coefficient_l2();
      worst_trip = std::max(worst_trip, max_coefficient_gap(torus::analyze(s), p) / l2);
      worst_parseval = std::max(worst_parseval, std::abs(torus::lp_norm(s, 2.0) - l2) / l2);
    }
  }
  return {{"round-trip relative error <= 1e-10", worst_trip <= 1e-10, fmt(worst_trip)},
          {"Parseval relative error <= 1e-10", worst_parseval <= 1e-10, fmt(worst_parseval)}};
}

std::vector<Check> kernel_facts() {
  std::vector<Check> out;
  double worst_l1 = 0.0;
  bool peak_exact = true;
  std::string peaks;
  for (std::int64_t n : {4, 64, 1023}) {
    const TrigPoly k = extremals::fejer(n);
    const std::size_t grid = n == 4 ? 64 : torus::next_pow2_above(4 * static_cast<std::size_t>(n));
    worst_l1 = std::max(worst_l1, std::abs(torus::lp_norm(torus::synthesize(k, grid), 1.0) - 1.0));
    // K_n(0) is the coefficient sum; its numerators sum to (n+1)^2 over n+1.
    std::int64_t num = 0;
    for (std::int64_t j = -n; j <= n; ++j) num += n + 1 - std::abs(j);
    double sum = 0.0;
    for (const auto& [f, c] : k) sum += c.real();
    peak_exact = peak_exact && num == (n + 1) * (n + 1) &&
                 std::abs(sum - static_cast<double>(n + 1)) <= 1e-12 * static_cast<double>(n + 1);
    peaks += (peaks.empty() ? "" : ",") + fmt17(sum);
  }
  out.push_back({"||K_n||_1 = 1 within 1e-8, n in {4,64,1023}", worst_l1 <= 1e-8, fmt(worst_l1)});
  out.push_back({"K_n(0) = n+1 (integer numerators exact, float sum within 1e-12)", peak_exact, peaks});

  bool flat = true;
  double combo = 0.0;
  for (int N = 1; N <= 10; ++N) {
    const TrigPoly v = extremals::vallee_poussin(N);
    const std::int64_t b = std::int64_t{1} << N;
    for (std::int64_t n = -b; n <= b; ++n) flat = flat && v[n] == Complex(1.0, 0.0);
    const TrigPoly ref = 2.0 * extremals::fejer(2 * b - 1) - extremals::fejer(b - 1);
    combo = std::max(combo, max_coefficient_gap(v, ref));
  }
  out.push_back({"V_{2^N}^(n) = 1 exactly for |n| <= 2^N, N <= 10", flat, flat ? "exact" : "not flat"});
  out.push_back({"V_{2^N} = 2K - K coefficientwise within 1e-14", combo <= 1e-14, fmt(combo)});
  return out;
}

std::vector<Check> sharpness() {
  const double r[] = {0.25, 0.5};
  const auto t = extremals::sharpness_experiment(4, 14, r);
  return {{"slope log L_N vs log N = 0.50 +- 0.05", std::abs(t.l_slope - 0.5) <= 0.05, fmt(t.l_slope)},
          {"max/min of L_N/(1+Phi_1/2) <= 2", t.ratio_spread[1] <= 2.0, fmt(t.ratio_spread[1])},
          {"L_N/(1+Phi_1/4) grows >= 1.3x from N=4 to 14", t.ratio_growth[0] >= 1.3,
           fmt(t.ratio_growth[0])}};
}

TrigPoly block_filling_poly(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TrigPoly p(1);
  if (rng() & 1) p.set(0, random_coefficient(rng));
  for (int k = 1; k <= 18; ++k) {
    const auto [lo, hi] = spectra::block_bounds(spectra::BlockScheme::shifted, k);
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int c = 0; c < count; ++c) {
      const auto n = lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
      p.set(n, random_coefficient(rng) + Complex(0.0, 1e-3));
    }
  }
  return p;
}

std::vector<double> zygmund_corpus_ratios() {
  std::vector<double> out;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const TrigPoly p = block_filling_poly(7000 + i);
    const std::size_t grid[] = {torus::minimum_grid_size(p.degree())};
    out.push_back(zygmund::inverse_sqrt_zygmund_check(p, grid).ratio);
  }
  return out;
}

std::vector<Check> zygmund_machinery() {
  bool split_ok = true, energy_ok = true;
  std::string failure;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const TrigPoly p = block_filling_poly(7000 + i);
    const auto sel = zygmund::dyadic_max_select(p);
    try {
      const auto split = zygmund::even_odd_split(sel);
      std::vector<std::int64_t> merged(split.even.terms().begin(), split.even.terms().end());
      merged.insert(merged.end(), split.odd.terms().begin(), split.odd.terms().end());
      std::sort(merged.begin(), merged.end());
      zygmund::GreedySelection rebuilt;
      for (std::int64_t n : merged) rebuilt.blocks.push_back({0, n, std::abs(p[n])});
      std::vector<std::int64_t> chosen;
      for (const auto& b : sel.blocks) chosen.push_back(b.lambda);
      energy_ok = energy_ok && chosen == merged && rebuilt.energy() == sel.energy();
    } catch (const VerificationFailure& e) {
      split_ok = false;
      failure = e.what();
    }
  }
  const auto first = zygmund_corpus_ratios();
  const auto second = zygmund_corpus_ratios();
  const double mx = *std::max_element(first.begin(), first.end());
  const bool finite = std::all_of(first.begin(), first.end(), [](double r) { return std::isfinite(r); });
  return {{"even_odd_split ratios in [2,16] for 200 polynomials", split_ok, split_ok ? "ok" : failure},
          {"energy identity exact", energy_ok, energy_ok ? "exact" : "mismatch"},
          {"max inverse-sqrt Zygmund ratio finite", finite && mx > 0.0, fmt17(mx)},
          {"rerun bit-exact", first == second, first == second ? "identical" : "differs"},
          {"matches regression snapshot", mx == snapshot::kZygmundCorpusMax,
           "snapshot " + fmt17(snapshot::kZygmundCorpusMax)}};
}

double harmonic_block(std::int64_t lo, std::int64_t hi) {
  long double s = 0.0L;
  for (std::int64_t n = hi; n >= lo; --n) s += 1.0L / static_cast<long double>(n);
  return static_cast<double>(s);
}

std::vector<Check> paley_criterion() {
  using namespace multipliers;
  const int K = 20;
  const std::int64_t horizon = std::int64_t{1} << (K + 1);
  spectra::FrequencySet pow2(1);
  for (int k = 0; k <= K + 1; ++k) pow2.insert(std::int64_t{1} << k);
  const auto chi = MultiplierSeq::indicator(pow2, horizon);
  const auto half_open = paley_block_sums(chi, K, BlockConvention::half_open);
  const auto inclusive = paley_block_sums(chi, K, BlockConvention::inclusive);

  const auto one = paley_block_sums(MultiplierSeq::constant(1.0, horizon), K);
  const auto inv = paley_block_sums(MultiplierSeq::inverse_sqrt(horizon, Side::nonnegative), K);
  double worst = 0.0;
  for (int k = 0; k <= K; ++k) {
    const std::int64_t lo = std::int64_t{1} << k;
    worst = std::max(worst, std::abs(inv.block_sums[static_cast<std::size_t>(k)] -
                                     harmonic_block(lo, 2 * lo)));
  }
  const double n4 = inv.block_sums[2];
  return {{"chi_{2^k} Paley sup = 1 (half-open blocks)", half_open.sup == 1.0,
           fmt(half_open.sup) + " (inclusive blocks: " + fmt(inclusive.sup) + ")"},
          {"m = 1 flagged diverging", one.verdict == PaleyVerdict::diverging, to_string(one.verdict)},
          {"m = 1 last-quarter growth >= 4x", one.tail_growth >= 4.0, fmt(one.tail_growth)},
          {"inverse-sqrt blocks = harmonic partial sums within 1e-12", worst <= 1e-12, fmt(worst)},
          {"block N=4 = 0.884523...", std::floor(n4 * 1e6) == 884523.0, fmt17(n4)}};
}

std::vector<Check> bonami_growth() {
  const int p_grid[] = {4, 8, 16, 32, 64};
  const auto base = spectra::geometric_lacunary(2, 8);
  const spectra::FrequencySet lam1 = spectra::FrequencySet::from_1d(base.terms());
  const spectra::FrequencySet lam2 = spectra::sumset_bonami(base, 2, 4096).elements;
  const auto six = spectra::geometric_lacunary(2, 6);
  const spectra::FrequencySet factor = spectra::FrequencySet::from_1d(six.terms());
  const spectra::FrequencySet factors[] = {factor, factor};

  bool ok1 = true, ok2 = true, ok2d = true, order = true;
  std::string v1, v2, v2d, vgap;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const growth::Ensemble e{growth::EnsembleKind::random_signs, seed, 16};
    const growth::Ensemble e2d{growth::EnsembleKind::random_signs, seed, 8};
    const double a1 = growth::growth_exponent(lam1, p_grid, e).exponent;
    const double a2 = growth::growth_exponent(lam2, p_grid, e).exponent;
    const double a2d = growth::tensor_growth(factors, p_grid, e2d).exponent;
    ok1 = ok1 && std::abs(a1 - 0.5) <= 0.12;
    ok2 = ok2 && std::abs(a2 - 1.0) <= 0.2;
    ok2d = ok2d && std::abs(a2d - 1.0) <= 0.2;
    order = order && a2 - a1 >= 0.3;
    const char* sep = seed == 1 ? "" : ",";
    v1 += sep + fmt(a1);
    v2 += sep + fmt(a2);
    v2d += sep + fmt(a2d);
    vgap += sep + fmt(a2 - a1);
  }
  return {{"lacunary base exponent 0.5 +- 0.12", ok1, v1},
          {"Lambda^(2) exponent 1.0 +- 0.2", ok2, v2},
          {"2D lacunary product exponent 1.0 +- 0.2", ok2d, v2d},
          {"alpha(Lambda^(2)) - alpha(Lambda) >= 0.3 on 5 seeds", order, vgap}};
}

std::vector<Check> e_matrix_algebra() {
  double trace = 0.0, herm = 0.0, recomb = 0.0, adjoint = 0.0, cs = 0.0;
  bool cs_ok = true;
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 100; ++i) {
    const TrigPoly f = random_poly_2d(rng, 8);
    const auto e = growth::e_matrix(f);
    const double l2 = f.coefficient_l2();
    trace = std::max(trace, std::abs(e.trace() - l2 * l2) / (l2 * l2));
    herm = std::max(herm, (e.entries - e.entries.adjoint()).norm() / e.entries.norm());
    std::vector<std::int64_t> order(e.index.rbegin(), e.index.rend());
    const auto s = growth::offdiagonal_split(e, order);
    recomb = std::max(recomb, (s.diag + s.upper + s.lower - e.entries).cwiseAbs().maxCoeff());
    adjoint = std::max(adjoint, (s.upper - s.lower.adjoint()).norm() / e.entries.norm());
    try {
      const auto v = growth::cauchy_schwarz_check(e, f);
      cs = std::max(cs, v.lhs / v.rhs);
    } catch (const VerificationFailure&) {
      cs_ok = false;
    }
  }
  double rank_one = 0.0;
  for (int i = 0; i < 20; ++i) {
    TrigPoly f(2);
    const int na = 2 + static_cast<int>(rng() % 4), nb = 2 + static_cast<int>(rng() % 4);
    std::vector<Complex> a(na), b(nb);
    for (auto& x : a) x = random_coefficient(rng);
    for (auto& x : b) x = random_coefficient(rng);
    for (int m = 0; m < na; ++m) {
      for (int n = 0; n < nb; ++n) f.set({3 * m - 2, 5 * n - 7}, a[m] * b[n]);
    }
    const auto v = growth::cauchy_schwarz_check(growth::e_matrix(f), f);
    rank_one = std::max(rank_one, std::abs(v.lhs - v.rhs) / v.rhs);
  }
  return {{"trace = ||f||_2^2 (rel 1e-12)", trace <= 1e-12, fmt(trace)},
          {"Hermitian (rel 1e-14)", herm <= 1e-14, fmt(herm)},
          {"diag + upper + lower = E exactly", recomb == 0.0, fmt(recomb)},
          {"upper = lower^*", adjoint == 0.0, fmt(adjoint)},
          {"sum |E|^2 <= ||f||_2^4 (1 + 1e-10)", cs_ok && cs <= 1.0 + 1e-10, fmt17(cs)},
          {"rank-one equality within 1e-10", rank_one <= 1e-10, fmt(rank_one)}};
}

std::vector<Check> ingham_example() {
  const extremals::InghamParams params{0.5, 0.8};
  std::vector<std::int64_t> horizons;
  for (int e = 10; e <= 17; ++e) horizons.push_back(std::int64_t{1} << e);
  const auto tails = extremals::ingham_tails(params, horizons);
  bool decreasing = true;
  std::string sups;
  for (std::size_t i = 0; i < tails.size(); ++i) {
    if (i > 0 && !(tails[i].sup < tails[i - 1].sup)) decreasing = false;
    sups += (i ? "," : "") + fmt(tails[i].sup);
  }
  const auto d = extremals::sidon_weight_divergence(0.8, 1000000);
  return {{"tail sup norms strictly decrease, M = 2^10..2^17", decreasing, sups},
          {"sum_{2..1e6} 1/(n (ln n)^0.8) > 3.5", d.partial_sum > 3.5, fmt(d.partial_sum)},
          {"partial sum within 5% of the integral estimate", d.relative_gap() <= 0.05,
           fmt(d.relative_gap()) + " (integral " + fmt(d.integral_estimate) + ")"}};
}

constexpr double kProbeL = 256.0;
constexpr std::size_t kProbeM = std::size_t{1} << 16;

realline::PaleyMeasure probe_measure() {
  std::vector<realline::DensityBlock> blocks;
  for (int k = -6; k <= 2; ++k) blocks.push_back({k, 1.0});
  return realline::PaleyMeasure::from_blocks(blocks, realline::DensityProfile::uniform,
                                             std::ldexp(1.0, -6));
}

std::vector<Check> real_line() {
  using namespace realline;
  std::vector<Check> out;

  const auto inv = PaleyMeasure::inverse_abs(-20, 20);
  double worst = 0.0;
  for (int k = -20; k <= 20; ++k) {
    worst = std::max(worst, std::abs(inv.block_mass(k) - 2.0 * std::numbers::ln2));
  }
  const auto sup = paley_sup(inv);
  out.push_back({"|xi|^-1 block mass = 2 ln 2 +- 1e-10", worst <= 1e-10, fmt(worst)});
  out.push_back({"|xi|^-1 sup bounded (not diverging)", !sup.diverging && sup.sup < 1.39,
                 fmt(sup.sup)});

  const auto corpus = mean_zero_corpus(100, 2024, kProbeL, kProbeM, Interval{-8.0, 8.0});
  const auto mu = probe_measure();
  const auto a = paley_inequality_probe(mu, corpus);
  const auto b = paley_inequality_probe(mu, corpus);
  out.push_back({"H^1 probe max ratio <= 2 sqrt(sup mu)", a.max_ratio <= a.analytic_bound,
                 fmt17(a.max_ratio) + " (bound " + fmt(a.analytic_bound) + ")"});
  out.push_back({"H^1 probe rerun bit-exact", a.ratios == b.ratios,
                 a.ratios == b.ratios ? "identical" : "differs"});
  out.push_back({"H^1 probe matches regression snapshot", a.max_ratio == snapshot::kRealLineProbeMax,
                 "snapshot " + fmt17(snapshot::kRealLineProbeMax)});

  std::vector<DensityBlock> big;
  int k = 0;
  for (int j = 1; j <= 6; ++j) {
    big.push_back({k, std::pow(static_cast<double>(j), 4)});
    k = 5 * k + 1;
  }
  const auto rudin = rudin_counterexample(
      PaleyMeasure::from_blocks(big, DensityProfile::uniform), 6, kProbeL, kProbeM);
  const double low = *std::min_element(rudin.normalized.begin(), rudin.normalized.end());
  out.push_back({"Rudin witness j^4 W_j / mu(I_j) >= 0.5 for j = 1..6", low >= 0.5, fmt(low)});
  bool rejected = false;
  try {
    rudin_counterexample(inv, 6, kProbeL, kProbeM);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  out.push_back({"Rudin construction rejects a Paley measure", rejected, rejected ? "rejected" : "accepted"});

  const auto bump = raised_cosine_bump(kProbeL, kProbeM, Interval{-1.0, 1.0});
  const auto sweep = low_block_sweep(bump, -4, -20);
  const double need = 0.4 * sweep.f0 * sweep.f0 * std::numbers::ln2;
  double least = sweep.increments.size() > 1 ? sweep.increments[1] : 0.0;
  for (std::size_t i = 1; i < sweep.increments.size(); ++i) least = std::min(least, sweep.increments[i]);
  out.push_back({"each added low block raises ||f^||^2 by >= 0.4 |f^(0)|^2 ln 2", least >= need,
                 fmt(least) + " (need " + fmt(need) + ")"});
  return out;
}

std::vector<Check> window_partition() {
  const int k_lo = -10, k_hi = 10;
  const double a = std::log(std::ldexp(1.0, k_lo + 2)), b = std::log(std::ldexp(1.0, k_hi));
  double lo = 10.0, hi = -10.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const double xi = std::exp(a + (b - a) * i / (n - 1));
    const double s = dyadic_window_partition(xi, k_lo, k_hi);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return {{"1 <= sum_k eta(2^-k xi) <= 2 on 1e4 log-grid points", lo >= 1.0 && hi <= 2.0,
           "[" + fmt17(lo) + ", " + fmt17(hi) + "]"}};
}

struct Entry {
  const char* name;
  double budget;
  std::function<std::vector<Check>()> run;
};

const std::map<int, Entry>& registry() {
  static const std::map<int, Entry> r = {
      {1, {"transform exactness", 10, transform_exactness}},
      {2, {"kernel facts", 5, kernel_facts}},
      {3, {"sharpness of r = 1/2", 60, sharpness}},
      {4, {"greedy selection and Zygmund ratio", 30, zygmund_machinery}},
      {5, {"Paley multiplier criterion", 5, paley_criterion}},
      {6, {"Lambda(p) / Bonami growth", 120, bonami_growth}},
      {7, {"E-matrix algebra", 15, e_matrix_algebra}},
      {8, {"Ingham example", 60, ingham_example}},
      {9, {"real line", 90, real_line}},
      {10, {"window partition", 2, window_partition}},
  };
  return r;
}

}  // namespace

bool CriterionResult::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (const auto& [id, e] : registry()) ids.push_back(id);
  return ids;
}

std::string criterion_name(int id) { return registry().at(id).name; }

CriterionResult run_criterion(int id) {
  const Entry& e = registry().at(id);
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  r.budget_seconds = e.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.checks = e.run();
  } catch (const std::exception& ex) {
    r.checks = {{"ran without error", false, ex.what()}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.checks.push_back({"within time budget", r.seconds <= r.budget_seconds,
                      fmt(r.seconds) + " s of " + fmt(r.budget_seconds)});
  return r;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << fmt(r.seconds)
     << " s):";
  for (const auto& c : r.checks) {
    os << (c.pass ? " ok" : " FAILED") << " {" << c.what << " = " << c.value << "}";
  }
  return os.str();
}

}  // namespace pzbench::selftest
