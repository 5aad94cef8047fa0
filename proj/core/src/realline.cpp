#include "pzbench/realline.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "pzbench/window.hpp"
#include "rng.hpp"
#include "sum.hpp"

namespace pzbench::realline {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxBlock = 1000;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Block k with 2^k <= |xi| < 2^{k+1}, exact for every finite nonzero xi.
int block_of(double xi) {
  int e = 0;
  std::frexp(std::abs(xi), &e);
  return e - 1;
}

double pow2(int k) { return std::ldexp(1.0, k); }

std::vector<Complex> spectrum_of(const CompactSignal& s) {
  std::vector<Complex> buf(s.samples().begin(), s.samples().end());
  const std::size_t sizes[] = {buf.size()};
  detail::fft_inplace(buf, sizes, detail::FftSign::forward);
  return buf;
}

double dft_frequency(const CompactSignal& s, std::size_t m) {
  const std::size_t M = s.size();
  const double sm = 2 * m < M ? static_cast<double>(m)
                              : static_cast<double>(m) - static_cast<double>(M);
  return sm / (2.0 * s.half_width());
}

void check_block_in_band(const CompactSignal& s, int k) {
  if (k > kMaxBlock || pow2(k + 2) > s.band()) {
    throw PreconditionError("block " + std::to_string(k) + " needs 2^(k+2) <= band " +
                            std::to_string(s.band()));
  }
}

std::vector<Complex> block_samples(const CompactSignal& s,
                                   const std::vector<Complex>& spec, int k) {
  const std::size_t M = s.size();
  std::vector<Complex> buf(M);
  for (std::size_t m = 0; m < M; ++m) {
    const double w = dyadic_window(k, dft_frequency(s, m));
    if (w != 0.0) buf[m] = w * spec[m];
  }
  const std::size_t sizes[] = {M};
  detail::fft_inplace(buf, sizes, detail::FftSign::backward);
  const double inv = 1.0 / static_cast<double>(M);
  for (Complex& z : buf) z *= inv;
  return buf;
}

// Integral of g over +-[2^k, 2^{k+1}), both signs, split at the window knot.
double block_integral(int k, const std::function<double(double)>& g) {
  const double a = pow2(k), mid = 1.5 * a, b = 2.0 * a;
  auto both = [&](double xi) { return g(xi) + g(-xi); };
  return integrate_gl(a, mid, both) + integrate_gl(mid, b, both);
}

}  // namespace

CompactSignal::CompactSignal(double half_width, std::vector<Complex> samples,
                             Interval support)
    : L_(half_width), samples_(std::move(samples)), support_(support) {
  if (!(L_ > 0.0) || !std::isfinite(L_)) {
    throw PreconditionError("half width must be positive and finite");
  }
  const std::size_t M = samples_.size();
  if (M < 16 || !is_pow2(M)) {
    throw PreconditionError("sample count must be a power of two >= 16, got " +
                            std::to_string(M));
  }
  if (!(support_.lo <= support_.hi) || support_.lo < -L_ || support_.hi > L_) {
    throw PreconditionError("declared support must lie inside [-L, L]");
  }
  h_ = 2.0 * L_ / static_cast<double>(M);
  first_ = M;
  for (std::size_t j = 0; j < M; ++j) {
    const Complex v = samples_[j];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw PreconditionError("signal samples must be finite");
    }
    if (support_.contains(x(j))) {
      first_ = std::min(first_, j);
      last_ = j;
    } else if (v != Complex{}) {
      throw PreconditionError("sample at x = " + std::to_string(x(j)) +
                              " lies outside the declared support");
    }
  }
  if (first_ == M) {
    first_ = 1;
    last_ = 0;
  }
}

Complex CompactSignal::integral() const {
  detail::CompensatedSum re, im;
  for (std::size_t j = first_; j <= last_ && j < size(); ++j) {
    re.add(samples_[j].real());
    im.add(samples_[j].imag());
  }
  return h_ * Complex(re.value(), im.value());
}

double CompactSignal::l1_norm() const {
  detail::CompensatedSum acc;
  for (std::size_t j = first_; j <= last_ && j < size(); ++j) acc.add(std::abs(samples_[j]));
  return h_ * acc.value();
}

Complex fourier_transform(const CompactSignal& s, double xi) {
  if (!(std::abs(xi) <= s.band())) {
    throw PreconditionError("frequency " + std::to_string(xi) +
                            " outside the validity band " + std::to_string(s.band()));
  }
  const double h = s.spacing();
  const Complex step = std::polar(1.0, -kTwoPi * xi * h);
  Complex re{};
  Complex phase{};
  for (std::size_t j = s.first(); j <= s.last() && j < s.size(); ++j) {
    // Restart the recurrence periodically to keep drift at roundoff level.
    if ((j - s.first()) % 128 == 0) {
      const double turns = xi * s.x(j);
      phase = std::polar(1.0, -kTwoPi * (turns - std::floor(turns)));
    }
    re += s[j] * phase;
    phase *= step;
  }
  return h * re;
}

Transform fourier_transform(const CompactSignal& s, std::span<const double> xi) {
  Transform t;
  t.band = s.band();
  t.xi.assign(xi.begin(), xi.end());
  for (double x : xi) t.values.push_back(fourier_transform(s, x));
  double d2 = 0.0;
  for (std::size_t j = s.first(); j <= s.last() && j < s.size(); ++j) {
    const Complex prev = j > 0 ? s[j - 1] : Complex{};
    const Complex next = j + 1 < s.size() ? s[j + 1] : Complex{};
    d2 = std::max(d2, std::abs(next - 2.0 * s[j] + prev));
  }
  t.error_estimate = s.support().length() / 12.0 * d2;
  return t;
}

KRange default_k_range(const CompactSignal& s) {
  const double df = 1.0 / (2.0 * s.half_width());
  int k_res = 0;
  for (int k = -1000; k < 1000; ++k) {
    const double lo = pow2(k);
    const double m = std::floor(lo / df) + 1.0;
    if (m * df < 3.0 * lo) {
      k_res = k;
      break;
    }
  }
  KRange r;
  r.lo = std::max(-10, k_res);
  r.hi = static_cast<int>(std::floor(std::log2(s.band()))) - 2;
  if (r.lo > r.hi) throw PreconditionError("grid too coarse for any block");
  return r;
}

CompactSignal lp_block(const CompactSignal& s, int k) {
  check_block_in_band(s, k);
  const double L = s.half_width();
  return CompactSignal(L, block_samples(s, spectrum_of(s), k), Interval{-L, L});
}

double square_function_norm(const CompactSignal& s, KRange range) {
  if (range.lo > range.hi) throw PreconditionError("empty block range");
  check_block_in_band(s, range.hi);
  const auto spec = spectrum_of(s);
  std::vector<double> energy(s.size(), 0.0);
  for (int k = range.lo; k <= range.hi; ++k) {
    const auto b = block_samples(s, spec, k);
    for (std::size_t j = 0; j < b.size(); ++j) energy[j] += std::norm(b[j]);
  }
  detail::CompensatedSum acc;
  for (double e : energy) acc.add(std::sqrt(e));
  return s.spacing() * acc.value();
}

double square_function_norm(const CompactSignal& s) {
  return square_function_norm(s, default_k_range(s));
}

double integrate_gl(double a, double b, const std::function<double(double)>& fn) {
  return boost::math::quadrature::gauss<double, 64>::integrate(fn, a, b);
}

PaleyMeasure PaleyMeasure::from_atoms(std::vector<Atom> atoms, std::optional<double> gap) {
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.xi) || !(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      throw PreconditionError("atoms need finite positions and finite weights >= 0");
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.xi < y.xi; });
  PaleyMeasure m;
  m.kind_ = Kind::atoms;
  m.atoms_ = std::move(atoms);
  m.gap_ = gap;
  m.check_gap();
  return m;
}

PaleyMeasure PaleyMeasure::from_blocks(std::vector<DensityBlock> blocks,
                                       DensityProfile profile,
                                       std::optional<double> gap) {
  std::sort(blocks.begin(), blocks.end(),
            [](const DensityBlock& x, const DensityBlock& y) { return x.k < y.k; });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (std::abs(b.k) > kMaxBlock) throw PreconditionError("block index out of range");
    if (!(b.weight >= 0.0) || !std::isfinite(b.weight)) {
      throw PreconditionError("block weights must be finite and >= 0");
    }
    if (i > 0 && blocks[i - 1].k == b.k) {
      throw PreconditionError("duplicate block " + std::to_string(b.k));
    }
  }
  PaleyMeasure m;
  m.kind_ = Kind::dyadic_density;
  m.profile_ = profile;
  m.blocks_ = std::move(blocks);
  m.gap_ = gap;
  m.check_gap();
  return m;
}

PaleyMeasure PaleyMeasure::inverse_abs(int k_lo, int k_hi, std::optional<double> gap) {
  if (k_lo > k_hi) throw PreconditionError("empty block range");
  std::vector<DensityBlock> b;
  for (int k = k_lo; k <= k_hi; ++k) b.push_back({k, 1.0});
  return from_blocks(std::move(b), DensityProfile::inverse_abs, gap);
}

void PaleyMeasure::check_gap() const {
  if (!gap_) return;
  const double d = *gap_;
  if (!(d >= 0.0) || !std::isfinite(d)) throw PreconditionError("gap must be finite and >= 0");
  for (const Atom& a : atoms_) {
    if (a.weight > 0.0 && std::abs(a.xi) <= d) {
      throw PreconditionError("atom at " + std::to_string(a.xi) +
                              " lies inside the declared gap");
    }
  }
  for (const DensityBlock& b : blocks_) {
    if (b.weight > 0.0 && pow2(b.k) < d) {
      throw PreconditionError("block " + std::to_string(b.k) +
                              " meets the declared gap");
    }
  }
}

double PaleyMeasure::density(double xi) const {
  if (kind_ == Kind::atoms || xi == 0.0 || !std::isfinite(xi)) return 0.0;
  const int k = block_of(xi);
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), k,
                             [](const DensityBlock& b, int v) { return b.k < v; });
  if (it == blocks_.end() || it->k != k) return 0.0;
  return profile_ == DensityProfile::uniform ? it->weight / pow2(k + 1)
                                             : it->weight / std::abs(xi);
}

double PaleyMeasure::block_mass(int k) const {
  if (kind_ == Kind::atoms) {
    detail::CompensatedSum s;
    for (const Atom& a : atoms_) {
      if (a.xi != 0.0 && block_of(a.xi) == k) s.add(a.weight);
    }
    return s.value();
  }
  if (std::abs(k) > kMaxBlock) return 0.0;
  return block_integral(k, [this](double xi) { return density(xi); });
}

std::optional<KRange> PaleyMeasure::block_span() const {
  std::optional<KRange> r;
  auto grow = [&r](int k) {
    if (!r) {
      r = KRange{k, k};
    } else {
      r->lo = std::min(r->lo, k);
      r->hi = std::max(r->hi, k);
    }
  };
  for (const Atom& a : atoms_) {
    if (a.weight > 0.0 && a.xi != 0.0) grow(block_of(a.xi));
  }
  for (const DensityBlock& b : blocks_) {
    if (b.weight > 0.0) grow(b.k);
  }
  return r;
}

const char* to_string(DensityProfile p) {
  return p == DensityProfile::uniform ? "uniform" : "inverse-abs";
}

PaleySupReport paley_sup(const PaleyMeasure& mu, KRange range) {
  if (range.lo > range.hi) throw PreconditionError("empty block range");
  PaleySupReport r;
  r.range = range;
  r.argsup = range.lo;
  for (int k = range.lo; k <= range.hi; ++k) {
    const double m = mu.block_mass(k);
    r.masses.push_back(m);
    if (m > r.sup) {
      r.sup = m;
      r.argsup = k;
    }
  }
  const int n = static_cast<int>(r.masses.size());
  const int steps = std::max(2, (n + 3) / 4);
  if (n > steps) {
    bool up = true;
    for (int i = n - steps; i < n; ++i) {
      const double prev = r.masses[static_cast<std::size_t>(i - 1)];
      const double cur = r.masses[static_cast<std::size_t>(i)];
      if (!(cur > prev * (1.0 + 1e-9)) || cur <= 0.0) up = false;
    }
    r.diverging = up;
  }
  return r;
}

PaleySupReport paley_sup(const PaleyMeasure& mu) {
  const auto span = mu.block_span();
  if (!span) return PaleySupReport{};
  return paley_sup(mu, *span);
}

std::vector<std::pair<int, double>> block_l2_dmu(const CompactSignal& s,
                                                 const PaleyMeasure& mu) {
  std::vector<std::pair<int, double>> out;
  const auto span = mu.block_span();
  if (!span) return out;
  auto power = [&s](double xi) { return std::norm(fourier_transform(s, xi)); };
  if (mu.kind() == PaleyMeasure::Kind::atoms) {
    for (int k = span->lo; k <= span->hi; ++k) {
      detail::CompensatedSum acc;
      bool any = false;
      for (const Atom& a : mu.atoms()) {
        if (a.weight == 0.0 || a.xi == 0.0 || block_of(a.xi) != k) continue;
        acc.add(a.weight * power(a.xi));
        any = true;
      }
      if (any) out.emplace_back(k, acc.value());
    }
    return out;
  }
  for (const DensityBlock& b : mu.blocks()) {
    if (b.weight == 0.0) continue;
    if (pow2(b.k + 1) > s.band()) {
      throw PreconditionError("measure block " + std::to_string(b.k) +
                              " lies beyond the signal band");
    }
    out.emplace_back(b.k, block_integral(b.k, [&](double xi) {
                       return power(xi) * mu.density(xi);
                     }));
  }
  return out;
}

double l2_dmu_squared(const CompactSignal& s, const PaleyMeasure& mu) {
  detail::CompensatedSum acc;
  for (const auto& [k, v] : block_l2_dmu(s, mu)) acc.add(v);
  for (const Atom& a : mu.atoms()) {
    if (a.xi == 0.0 && a.weight > 0.0) acc.add(a.weight * std::norm(fourier_transform(s, 0.0)));
  }
  return acc.value();
}

PaleyProbeReport paley_inequality_probe(const PaleyMeasure& mu,
                                        std::span<const CompactSignal> corpus) {
  PaleyProbeReport r;
  r.sup_mass = paley_sup(mu).sup;
  r.analytic_bound = 2.0 * std::sqrt(r.sup_mass);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CompactSignal& s = corpus[i];
    if (std::abs(s.integral()) > 1e-10 * std::max(1.0, s.l1_norm())) {
      throw PreconditionError("corpus signal " + std::to_string(i) + " is not mean-zero");
    }
    const double lhs = mu.empty() ? 0.0 : std::sqrt(l2_dmu_squared(s, mu));
    const double rhs = square_function_norm(s);
    const double ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    r.ratios.push_back(ratio);
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.argmax = i;
    }
  }
  return r;
}

CompactSignal raised_cosine_bump(double L, std::size_t M, Interval K) {
  if (!(K.hi > K.lo)) throw PreconditionError("bump interval must be nondegenerate");
  const double c = 0.5 * (K.lo + K.hi), r = 0.5 * K.length();
  auto raw = sample(L, M, K, [&](double x) {
    return Complex(1.0 + std::cos(std::numbers::pi * (x - c) / r));
  });
  const double mass = raw.integral().real();
  if (!(mass > 0.0)) throw PreconditionError("bump interval holds no samples");
  std::vector<Complex> v(raw.samples().begin(), raw.samples().end());
  for (Complex& z : v) z /= mass;
  return CompactSignal(L, std::move(v), K);
}

CompactSignal mean_zero_reduction(const CompactSignal& f, const CompactSignal& psi) {
  if (f.half_width() != psi.half_width() || f.size() != psi.size()) {
    throw PreconditionError("mean-zero reduction needs matching grids");
  }
  if (std::abs(psi.integral() - 1.0) > 1e-8) {
    throw PreconditionError("psi must have unit integral within 1e-8");
  }
  const Complex I = f.integral();
  std::vector<Complex> g(f.size());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = f[j] - I * psi[j];
  const Interval hull{std::min(f.support().lo, psi.support().lo),
                      std::max(f.support().hi, psi.support().hi)};
  return CompactSignal(f.half_width(), std::move(g), hull);
}

std::vector<CompactSignal> smooth_corpus(std::size_t count, std::uint64_t seed,
                                         double L, std::size_t M, Interval K) {
  if (!(K.length() >= 2.0)) throw PreconditionError("corpus interval must have length >= 2");
  std::vector<CompactSignal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = detail::seeded_rng(seed, i);
    auto u = [&rng](double a, double b) { return a + (b - a) * detail::unit_uniform(rng); };
    struct Bump {
      double c, r, a, w, phase;
    };
    std::vector<Bump> bumps(1 + rng() % 3);
    for (Bump& b : bumps) {
      b.r = u(0.5, std::min(3.0, 0.5 * K.length()));
      b.c = u(K.lo + b.r, K.hi - b.r);
      b.a = u(-1.0, 1.0);
      b.w = u(0.0, 4.0);
      b.phase = u(0.0, kTwoPi);
    }
    auto f = sample(L, M, K, [&](double x) {
      double v = 0.0;
      for (const Bump& b : bumps) {
        const double t = (x - b.c) / b.r;
        if (std::abs(t) >= 1.0) continue;
        v += b.a * std::exp(1.0 - 1.0 / (1.0 - t * t)) * std::cos(kTwoPi * b.w * x + b.phase);
      }
      return Complex(v);
    });
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<CompactSignal> mean_zero_corpus(std::size_t count, std::uint64_t seed,
                                            double L, std::size_t M, Interval K) {
  const CompactSignal psi = raised_cosine_bump(L, M, K);
  std::vector<CompactSignal> out;
  out.reserve(count);
  for (const CompactSignal& f : smooth_corpus(count, seed, L, M, K)) {
    out.push_back(mean_zero_reduction(f, psi));
  }
  return out;
}

double eta_check(double x) {
  // eta'' = sum a_i (delta_{t_i} + delta_{-t_i}) for the knots of eta.
  static constexpr double t[] = {1.0, 1.5, 2.0, 3.0};
  static constexpr double a[] = {2.0, -2.0, -1.0, 1.0};
  const double u = kTwoPi * x;
  if (std::abs(u) < 1e-2) {
    double m2 = 0.0, m4 = 0.0, m6 = 0.0;
    for (int i = 0; i < 4; ++i) {
      m2 += a[i] * t[i] * t[i];
      m4 += a[i] * std::pow(t[i], 4);
      m6 += a[i] * std::pow(t[i], 6);
    }
    return m2 - u * u / 12.0 * m4 + std::pow(u, 4) / 360.0 * m6;
  }
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += a[i] * std::cos(u * t[i]);
  return -2.0 * acc / (u * u);
}

RudinCounterexample rudin_counterexample(const PaleyMeasure& mu, int J, double L,
                                         std::size_t M) {
  if (J < 1) throw PreconditionError("J must be >= 1");
  const auto span = mu.block_span();
  RudinCounterexample r;
  if (span) {
    int k = std::max(0, span->lo);
    for (int j = 1; j <= J && k <= span->hi; ++j) {
      const double need = std::pow(static_cast<double>(j), 4);
      while (k <= span->hi && mu.block_mass(k) < need) ++k;
      if (k > span->hi) break;
      r.chain.push_back(k);
      r.block_mass.push_back(mu.block_mass(k));
      k = 5 * k + 1;
    }
  }
  if (static_cast<int>(r.chain.size()) < J) {
    throw PreconditionError("no counterexample: only " + std::to_string(r.chain.size()) +
                            " blocks with mu(I_{k_j}) >= j^4 and k_{j+1} > 5 k_j; the "
                            "measure is Paley within its range");
  }

  auto fhat = [&r](double xi) {
    double v = 0.0;
    for (std::size_t j = 0; j < r.chain.size(); ++j) {
      const double jj = static_cast<double>(j + 1);
      v += dyadic_window(r.chain[j], xi) / (jj * jj);
    }
    return v;
  };
  for (std::size_t j = 0; j < r.chain.size(); ++j) {
    const int k = r.chain[j];
    double w = 0.0;
    if (mu.kind() == PaleyMeasure::Kind::atoms) {
      for (const Atom& a : mu.atoms()) {
        if (a.xi != 0.0 && block_of(a.xi) == k) w += a.weight * fhat(a.xi) * fhat(a.xi);
      }
    } else {
      w = block_integral(k, [&](double xi) { return fhat(xi) * fhat(xi) * mu.density(xi); });
    }
    const double jj = static_cast<double>(j + 1);
    r.witness.push_back(w);
    r.normalized.push_back(w / (r.block_mass[j] / std::pow(jj, 4)));
  }

  const double band = 0.25 * static_cast<double>(M) / (2.0 * L);
  for (std::size_t J2 = 1; J2 <= r.chain.size(); ++J2) {
    if (3.0 * pow2(r.chain[J2 - 1]) > band) break;
    r.partial_sums.push_back(sample(L, M, Interval{-L, L}, [&](double x) {
      double v = 0.0;
      for (std::size_t j = 0; j < J2; ++j) {
        const double s = pow2(r.chain[j]);
        const double jj = static_cast<double>(j + 1);
        v += s * eta_check(s * x) / (jj * jj);
      }
      return Complex(v);
    }));
  }
  return r;
}

ZygmundLineReport zygmund_realline_probe(const PaleyMeasure& mu, const CompactSignal& f,
                                         Interval K) {
  if (!mu.gap() || !(*mu.gap() > 0.0)) {
    throw PreconditionError(
        "the L log^{1/2} L probe needs a declared gap mu([-delta, delta]) = 0; without "
        "one it fails, e.g. for |xi|^{-1} d xi whenever f^(0) != 0 (see low_block_sweep)");
  }
  if (f.support().lo < K.lo || f.support().hi > K.hi) {
    throw PreconditionError("signal support must lie inside K");
  }
  ZygmundLineReport r;
  r.lhs = std::sqrt(l2_dmu_squared(f, mu));
  detail::CompensatedSum acc;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!K.contains(f.x(j))) continue;
    const double a = std::abs(f[j]);
    acc.add(a * std::sqrt(std::log1p(a)));
  }
  r.phi = f.spacing() * acc.value();
  r.ratio = r.lhs / (1.0 + r.phi);
  return r;
}

LowBlockSweep low_block_sweep(const CompactSignal& f, int k_top, int k_low) {
  if (k_low > k_top) throw PreconditionError("k_low must be <= k_top");
  if (pow2(k_top + 1) > f.band()) throw PreconditionError("k_top lies beyond the band");
  LowBlockSweep r;
  r.f0 = std::abs(fourier_transform(f, 0.0));
  double total = 0.0;
  for (int k = k_top; k >= k_low; --k) {
    const double inc = block_integral(k, [&f](double xi) {
      return std::norm(fourier_transform(f, xi)) / std::abs(xi);
    });
    total += inc;
    r.k.push_back(k);
    r.cumulative.push_back(total);
    r.increments.push_back(inc);
  }
  return r;
}

ProductSupReport product_paley_sup_2d(const PaleyMeasure& mu, KRange mu_range,
                                      const PaleyMeasure& nu, KRange nu_range) {
  const auto a = paley_sup(mu, mu_range);
  const auto b = paley_sup(nu, nu_range);
  ProductSupReport r;
  r.product_of_sups = a.sup * b.sup;
  r.diverging = a.diverging || b.diverging;
  for (std::size_t i = 0; i < a.masses.size(); ++i) {
    for (std::size_t j = 0; j < b.masses.size(); ++j) {
      const double m = a.masses[i] * b.masses[j];
      if (m > r.sup) {
        r.sup = m;
        r.argsup = {mu_range.lo + static_cast<int>(i), nu_range.lo + static_cast<int>(j)};
      }
    }
  }
  return r;
}

}  // namespace pzbench::realline
