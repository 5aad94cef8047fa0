#include "pzbench/growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "pzbench/fit.hpp"
#include "rng.hpp"
#include "sum.hpp"

namespace pzbench::growth {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using detail::unit_uniform;

std::size_t total_points(std::span<const std::size_t> grid) {
  std::size_t t = 1;
  for (std::size_t m : grid) t *= m;
  return t;
}

// (mean |v|^p)^{1/p}, peak-scaled.
double power_mean(std::span<const Complex> v, double p) {
  double peak = 0.0;
  for (const Complex& z : v) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return 0.0;
  detail::CompensatedSum acc;
  for (const Complex& z : v) acc.add(std::pow(std::abs(z) / peak, p));
  return peak * std::pow(acc.value() / static_cast<double>(v.size()), 1.0 / p);
}

double grid_sup(std::span<const Complex> v) {
  double peak = 0.0;
  for (const Complex& z : v) peak = std::max(peak, std::abs(z));
  return peak;
}

// exp(2 pi i n . theta_j) over the whole grid, row-major.
std::vector<Complex> character(const torus::Frequency& n,
                               std::span<const std::size_t> grid) {
  std::vector<Complex> out(total_points(grid), Complex{1.0, 0.0});
  std::size_t stride = out.size();
  for (std::size_t a = 0; a < grid.size(); ++a) {
    const std::size_t m = grid[a];
    stride /= m;
    const auto mm = static_cast<std::int64_t>(m);
    std::vector<Complex> tab(m);
    std::int64_t r = n[a] % mm;
    if (r < 0) r += mm;
    for (std::size_t j = 0; j < m; ++j) {
      const auto k = static_cast<std::size_t>((r * static_cast<std::int64_t>(j)) % mm);
      tab[j] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(m));
    }
    for (std::size_t lin = 0; lin < out.size(); ++lin) {
      out[lin] *= tab[(lin / stride) % m];
    }
  }
  return out;
}

std::vector<int> checked_p_grid(std::span<const int> p_grid) {
  std::vector<int> ps;
  for (int p : p_grid) ps.push_back(checked_even_p(p));
  return ps;
}

}  // namespace

const char* to_string(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::random_signs: return "random-signs";
    case EnsembleKind::steinhaus: return "steinhaus";
    case EnsembleKind::flat: return "flat";
    case EnsembleKind::phase_ascent: return "phase-ascent";
  }
  return "?";
}

EnsembleKind ensemble_kind_from_string(const std::string& s) {
  for (auto k : {EnsembleKind::random_signs, EnsembleKind::steinhaus,
                 EnsembleKind::flat, EnsembleKind::phase_ascent}) {
    if (s == to_string(k)) return k;
  }
  throw PreconditionError("unknown ensemble '" + s + "'");
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  return detail::seeded_rng(seed, trial);
}

torus::TrigPoly draw(const spectra::FrequencySet& spectrum, EnsembleKind kind,
                     std::uint64_t seed, std::size_t trial) {
  auto rng = trial_rng(seed, trial);
  torus::TrigPoly f(spectrum.dim());
  const bool steinhaus = kind == EnsembleKind::steinhaus ||
                         (kind == EnsembleKind::phase_ascent && trial > 0);
  for (const auto& n : spectrum) {
    if (kind == EnsembleKind::random_signs) {
      f.set(n, (rng() >> 63) ? -1.0 : 1.0);
    } else if (steinhaus) {
      f.set(n, std::polar(1.0, kTwoPi * unit_uniform(rng)));
    } else {
      f.set(n, 1.0);
    }
  }
  return f;
}

torus::TrigPoly phase_ascent(
    const torus::TrigPoly& start, std::span<const std::size_t> grid,
    const std::function<double(std::span<const Complex>)>& target,
    PhaseAscentOptions options) {
  if (options.sweeps < 0 || options.candidates < 2) {
    throw PreconditionError("phase ascent needs sweeps >= 0 and candidates >= 2");
  }
  torus::TrigPoly f = start;
  const auto s = torus::synthesize(f, grid);
  std::vector<Complex> v(s.values().begin(), s.values().end());
  std::vector<Complex> trial(v.size());
  double best = target(v);

  std::vector<torus::Frequency> coords;
  for (const auto& [n, c] : f) coords.push_back(n);
  std::vector<std::vector<Complex>> chars;
  chars.reserve(coords.size());
  for (const auto& n : coords) chars.push_back(character(n, grid));

  for (int sweep = 0; sweep < options.sweeps; ++sweep) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const Complex old = f[coords[i]];
      const double r = std::abs(old);
      Complex chosen = old;
      for (int c = 0; c < options.candidates; ++c) {
        const Complex cand =
            std::polar(r, kTwoPi * static_cast<double>(c) / options.candidates);
        const Complex delta = cand - old;
        if (delta == Complex{}) continue;
        for (std::size_t j = 0; j < v.size(); ++j) trial[j] = v[j] + delta * chars[i][j];
        const double val = target(trial);
        if (val > best) {
          best = val;
          chosen = cand;
        }
      }
      if (chosen != old) {
        const Complex delta = chosen - old;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += delta * chars[i][j];
        f.set(coords[i], chosen);
      }
    }
  }
  return f;
}

std::vector<std::size_t> exact_grid(const torus::TrigPoly& p, int even_p) {
  checked_even_p(even_p);
  std::vector<std::size_t> grid(p.dim());
  for (std::size_t a = 0; a < p.dim(); ++a) {
    const auto spread = static_cast<std::size_t>(p.max_index(a) - p.min_index(a));
    grid[a] = std::max(torus::minimum_grid_size(p.degree(a)),
                       torus::next_pow2_above(static_cast<std::size_t>(even_p / 2) * spread));
  }
  return grid;
}

int checked_even_p(double p) {
  if (!(p >= 2.0 && p <= kMaxEvenP) || p != std::floor(p) ||
      static_cast<int>(p) % 2 != 0) {
    throw PreconditionError("p must be an even integer in [2, 64]; got " +
                            std::to_string(p));
  }
  return static_cast<int>(p);
}

std::vector<double> lp_ratios(const torus::TrigPoly& f, std::span<const int> p_grid) {
  const auto ps = checked_p_grid(p_grid);
  if (ps.empty()) return {};
  const double l2 = f.coefficient_l2();
  if (l2 == 0.0) throw PreconditionError("lp ratio of the zero polynomial");
  const auto grid = exact_grid(f, *std::max_element(ps.begin(), ps.end()));
  const auto s = torus::synthesize(f, grid);
  std::vector<double> out;
  for (int p : ps) out.push_back(torus::lp_norm(s, p) / l2);
  return out;
}

LambdaPResult lambda_p_ratio(const spectra::FrequencySet& spectrum, double p,
                             const Ensemble& ensemble) {
  const int ep = checked_even_p(p);
  if (spectrum.empty()) throw PreconditionError("empty spectrum");
  if (ensemble.trials < 1) throw PreconditionError("trials must be >= 1");
  LambdaPResult r;
  for (std::size_t t = 0; t < ensemble.trials; ++t) {
    torus::TrigPoly f = draw(spectrum, ensemble.kind, ensemble.seed, t);
    const auto grid = exact_grid(f, ep);
    if (ensemble.kind == EnsembleKind::phase_ascent) {
      f = phase_ascent(f, grid, [ep](std::span<const Complex> v) {
        return power_mean(v, ep);
      });
    }
    const double ratio = lp_ratios(f, std::span<const int>(&ep, 1))[0];
    if (t == 0 || ratio > r.ratio) {
      r.ratio = ratio;
      r.best_trial = t;
    }
    r.grid = grid;
  }
  return r;
}

GrowthReport growth_exponent(const spectra::FrequencySet& spectrum,
                             std::span<const int> p_grid,
                             const Ensemble& ensemble,
                             std::size_t max_grid_points) {
  const auto ps = checked_p_grid(p_grid);
  if (ps.size() < 3) throw PreconditionError("growth fit needs >= 3 exponents");
  if (spectrum.empty()) throw PreconditionError("empty spectrum");
  if (ensemble.trials < 1) throw PreconditionError("trials must be >= 1");
  const int pmax = *std::max_element(ps.begin(), ps.end());

  GrowthReport rep;
  rep.spectrum = "dim=" + std::to_string(spectrum.dim()) +
                 " size=" + std::to_string(spectrum.size());
  rep.spectrum_size = spectrum.size();
  rep.ensemble = ensemble;
  rep.p_grid = ps;
  rep.ratios.assign(ps.size(), 0.0);
  rep.grid = exact_grid(draw(spectrum, EnsembleKind::flat, 0, 0), pmax);
  const std::size_t points = total_points(rep.grid);
  if (points > max_grid_points) throw CapExceeded(max_grid_points, points);

  for (std::size_t t = 0; t < ensemble.trials; ++t) {
    torus::TrigPoly f = draw(spectrum, ensemble.kind, ensemble.seed, t);
    if (ensemble.kind == EnsembleKind::phase_ascent) {
      f = phase_ascent(f, rep.grid, [pmax](std::span<const Complex> v) {
        return power_mean(v, pmax);
      });
    }
    const auto s = torus::synthesize(f, rep.grid);
    const double l2 = f.coefficient_l2();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      rep.ratios[i] = std::max(rep.ratios[i], torus::lp_norm(s, ps[i]) / l2);
    }
  }

  rep.degenerate = std::all_of(rep.ratios.begin(), rep.ratios.end(),
                               [](double r) { return std::abs(r - 1.0) <= 1e-12; });
  if (!rep.degenerate) {
    std::vector<double> x(ps.begin(), ps.end());
    const auto fit = log_log_fit(x, rep.ratios);
    rep.exponent = fit.slope;
    rep.intercept = fit.intercept;
  }
  return rep;
}

GrowthReport tensor_growth(std::span<const spectra::FrequencySet> factors,
                           std::span<const int> p_grid, const Ensemble& ensemble,
                           std::size_t max_grid_points) {
  if (factors.size() > 3) throw PreconditionError("tensor growth supports dim <= 3");
  const auto product = spectra::product_set(factors);
  auto rep = growth_exponent(product, p_grid, ensemble, max_grid_points);
  rep.spectrum = "product";
  for (const auto& f : factors) rep.spectrum += " " + std::to_string(f.size());
  return rep;
}

double EMatrix::trace() const { return entries.trace().real(); }

double EMatrix::frobenius_squared() const { return entries.squaredNorm(); }

EMatrix e_matrix(const torus::TrigPoly& f, std::size_t axis) {
  if (f.dim() != 2) throw PreconditionError("e_matrix needs a 2D polynomial");
  if (axis > 1) throw PreconditionError("e_matrix axis must be 0 or 1");
  const std::size_t other = 1 - axis;

  std::map<std::int64_t, std::size_t> pos;
  for (const auto& [n, c] : f) pos.emplace(n[axis], 0);
  EMatrix e;
  for (auto& [n, i] : pos) {
    i = e.index.size();
    e.index.push_back(n);
  }
  const auto d = static_cast<Eigen::Index>(e.index.size());
  e.entries = Eigen::MatrixXcd::Zero(d, d);

  std::map<std::int64_t, std::vector<std::pair<std::size_t, Complex>>> rows;
  for (const auto& [n, c] : f) rows[n[other]].emplace_back(pos[n[axis]], c);
  for (const auto& [m, row] : rows) {
    for (const auto& [i, a] : row) {
      for (const auto& [j, b] : row) {
        e.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            a * std::conj(b);
      }
    }
  }
  return e;
}

CauchySchwarzVerdict cauchy_schwarz_check(const EMatrix& e,
                                          const torus::TrigPoly& f) {
  CauchySchwarzVerdict v;
  v.lhs = e.frobenius_squared();
  const double l2 = f.coefficient_l2();
  v.rhs = l2 * l2 * l2 * l2;
  if (v.lhs > v.rhs * (1.0 + kCauchySchwarzTolerance)) {
    throw VerificationFailure("sum |E|^2 = " + std::to_string(v.lhs) +
                              " exceeds ||f||_2^4 = " + std::to_string(v.rhs));
  }
  return v;
}

OffDiagonalSplit offdiagonal_split(const EMatrix& e,
                                   std::span<const std::int64_t> order) {
  if (order.size() != e.index.size()) {
    throw PreconditionError("order must be a permutation of the E-matrix index");
  }
  std::map<std::int64_t, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  if (rank.size() != order.size()) throw PreconditionError("order has duplicates");
  std::vector<std::size_t> r(e.index.size());
  for (std::size_t i = 0; i < e.index.size(); ++i) {
    auto it = rank.find(e.index[i]);
    if (it == rank.end()) {
      throw PreconditionError("order is missing index " + std::to_string(e.index[i]));
    }
    r[i] = it->second;
  }
  const auto d = e.entries.rows();
  OffDiagonalSplit s{Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d),
                     Eigen::MatrixXcd::Zero(d, d)};
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto ri = r[static_cast<std::size_t>(i)];
      const auto rj = r[static_cast<std::size_t>(j)];
      auto& dst = ri == rj ? s.diag : (ri < rj ? s.upper : s.lower);
      dst(i, j) = e.entries(i, j);
    }
  }
  return s;
}

namespace {

std::size_t sidon_grid(const torus::TrigPoly& f, std::size_t oversample) {
  const auto deg = static_cast<std::size_t>(std::max<std::int64_t>(1, f.degree()));
  return std::max(torus::minimum_grid_size(f.degree()),
                  torus::next_pow2_above(oversample * deg - 1));
}

}  // namespace

double sidon_ratio(const multipliers::MultiplierSeq& m, const torus::TrigPoly& f,
                   std::size_t oversample) {
  if (f.dim() != 1) throw PreconditionError("sidon_ratio needs a 1D polynomial");
  if (f.empty()) return 0.0;
  detail::CompensatedSum num;
  for (const auto& [n, c] : f) num.add(std::abs(m(n[0]) * c));
  const double sup = torus::lp_norm(torus::synthesize(f, sidon_grid(f, oversample)),
                                    torus::kInfinity);
  return sup == 0.0 ? 0.0 : num.value() / sup;
}

SidonBound sidon_lower_bound(const multipliers::MultiplierSeq& m,
                             const spectra::FrequencySet& spectrum,
                             const Ensemble& ensemble, std::size_t oversample) {
  if (spectrum.dim() != 1) throw PreconditionError("sidon bound needs a 1D spectrum");
  if (ensemble.trials < 1) throw PreconditionError("trials must be >= 1");
  spectra::FrequencySet live(1);
  for (const auto& n : spectrum) {
    if (std::abs(n[0]) > m.horizon()) {
      throw PreconditionError("spectrum exceeds the multiplier horizon");
    }
    if (m(n[0]) != Complex{}) live.insert(n);
  }
  SidonBound b;
  if (live.empty()) return b;

  auto weighted = [&](const torus::TrigPoly& u) {
    torus::TrigPoly f(1);
    for (const auto& [n, c] : u) f.set(n, std::abs(m(n[0])) * c);
    return f;
  };
  const auto neg_sup = [](std::span<const Complex> v) { return -grid_sup(v); };

  const torus::TrigPoly flat = weighted(draw(live, EnsembleKind::flat, 0, 0));
  b.grid = sidon_grid(flat, oversample);
  const std::size_t grid[] = {b.grid};
  for (std::size_t t = 0; t < ensemble.trials; ++t) {
    torus::TrigPoly f = weighted(draw(live, ensemble.kind, ensemble.seed, t));
    if (ensemble.kind == EnsembleKind::phase_ascent) f = phase_ascent(f, grid, neg_sup);
    const double r = sidon_ratio(m, f, oversample);
    if (r > b.value) {
      b.value = r;
      b.best = "trial " + std::to_string(t);
    }
  }
  const double r = sidon_ratio(m, phase_ascent(flat, grid, neg_sup), oversample);
  if (r > b.value) {
    b.value = r;
    b.best = "phase-ascent";
  }
  return b;
}

}  // namespace pzbench::growth
