#include "pzbench/extremals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pzbench/fit.hpp"
#include "pzbench/multipliers.hpp"
#include "sum.hpp"

namespace pzbench::extremals {

torus::TrigPoly fejer(std::int64_t n) {
  if (n < 1) throw PreconditionError("fejer order must be >= 1");
  torus::TrigPoly k(1);
  const double d = static_cast<double>(n + 1);
  for (std::int64_t j = -n; j <= n; ++j) {
    k.set(j, (d - static_cast<double>(std::abs(j))) / d);
  }
  return k;
}

torus::TrigPoly vallee_poussin(int N) {
  if (N < 1 || N > 40) throw PreconditionError("vallee_poussin needs 1 <= N <= 40");
  const std::int64_t a = std::int64_t{1} << (N + 1);  // order + 1 of the wide kernel
  const std::int64_t b = std::int64_t{1} << N;
  torus::TrigPoly v(1);
  // Coefficients in closed form: 2 (1 - |j|/a) - (1 - |j|/b) on |j| < b,
  // 2 (1 - |j|/a) on b <= |j| < a. On the flat part the two terms cancel exactly.
  for (std::int64_t j = -(a - 1); j <= a - 1; ++j) {
    const std::int64_t m = std::abs(j);
    if (m <= b) {
      v.set(j, 1.0);
    } else {
      v.set(j, 2.0 * static_cast<double>(a - m) / static_cast<double>(a));
    }
  }
  return v;
}

SharpnessTable sharpness_experiment(int n_min, int n_max,
                                    std::span<const double> r,
                                    std::size_t oversample) {
  if (n_min < 1 || n_max < n_min) {
    throw PreconditionError("sharpness needs 1 <= n_min <= n_max");
  }
  if (r.empty()) throw PreconditionError("sharpness needs at least one r");
  std::vector<torus::OrliczExponent> exps;
  for (double x : r) exps.emplace_back(x);

  SharpnessTable t;
  t.r.assign(r.begin(), r.end());
  for (int N = n_min; N <= n_max; ++N) {
    const std::size_t base = std::size_t{1} << (N + 1);
    if (oversample < kSharpnessOversample) {
      throw GridTooSmall(0, oversample * base, kSharpnessOversample * base);
    }
    const torus::TrigPoly v = vallee_poussin(N);
    SharpnessRow row;
    row.N = N;
    row.grid = torus::next_pow2_above(oversample * base - 1);
    const auto m = multipliers::MultiplierSeq::inverse_sqrt(v.degree());
    row.l = torus::weighted_l2(v, m);
    const auto s = torus::synthesize(v, row.grid);
    for (const auto& e : exps) {
      const double phi = torus::orlicz_functional(s, e);
      row.phi.push_back(phi);
      row.ratio.push_back(row.l / (1.0 + phi));
    }
    t.rows.push_back(std::move(row));
  }

  std::vector<double> ns, ls;
  for (const auto& row : t.rows) {
    ns.push_back(row.N);
    ls.push_back(row.l);
  }
  if (t.rows.size() >= 2) t.l_slope = log_log_fit(ns, ls).slope;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::vector<double> phi, ratio;
    for (const auto& row : t.rows) {
      phi.push_back(row.phi[i]);
      ratio.push_back(row.ratio[i]);
    }
    t.phi_slope.push_back(t.rows.size() >= 2 ? log_log_fit(ns, phi).slope : 0.0);
    const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
    t.ratio_spread.push_back(*hi / *lo);
    t.ratio_growth.push_back(ratio.back() / ratio.front());
  }
  return t;
}

void validate(const InghamParams& p) {
  if (!(p.gamma > 0.0 && p.gamma < 1.0)) {
    throw PreconditionError("ingham gamma must lie in (0, 1)");
  }
  if (!(p.c > (p.gamma + 1.0) / 2.0 && p.c <= 1.0)) {
    throw PreconditionError("ingham c must lie in ((gamma + 1) / 2, 1]; got " +
                            std::to_string(p.c));
  }
}

Complex ingham_coefficient(const InghamParams& p, std::int64_t n) {
  if (n < 2) return {};
  const double x = static_cast<double>(n);
  const double ln = std::log(x);
  // Reduce the phase mod 1 before scaling by 2 pi.
  const double turns = x * std::pow(ln, p.gamma);
  const double frac = turns - std::floor(turns);
  return std::polar(1.0 / (std::sqrt(x) * std::pow(ln, p.c)),
                    2.0 * std::numbers::pi * frac);
}

torus::TrigPoly ingham_partial_sum(const InghamParams& p, std::int64_t M) {
  validate(p);
  if (M < 3) throw PreconditionError("ingham horizon must be >= 3");
  torus::TrigPoly s(1);
  for (std::int64_t n = 2; n <= M; ++n) s.set(n, ingham_coefficient(p, n));
  return s;
}

std::vector<InghamTail> ingham_tails(const InghamParams& p,
                                     std::span<const std::int64_t> horizons,
                                     std::size_t oversample) {
  validate(p);
  if (oversample < 2) throw PreconditionError("ingham oversample must be >= 2");
  std::vector<InghamTail> out;
  for (std::int64_t M : horizons) {
    if (M < 3) throw PreconditionError("ingham horizon must be >= 3");
    torus::TrigPoly tail(1);
    for (std::int64_t n = M + 1; n <= 2 * M; ++n) tail.set(n, ingham_coefficient(p, n));
    InghamTail row;
    row.M = M;
    row.grid = torus::next_pow2_above(oversample * 2 * static_cast<std::size_t>(M) - 1);
    row.sup = torus::lp_norm(torus::synthesize(tail, row.grid), torus::kInfinity);
    out.push_back(row);
  }
  return out;
}

double SidonWeightDivergence::relative_gap() const {
  return std::abs(partial_sum - integral_estimate) / integral_estimate;
}

SidonWeightDivergence sidon_weight_divergence(double c, std::int64_t M) {
  if (!(c > 0.0 && c <= 1.0)) throw PreconditionError("c must lie in (0, 1]");
  if (M < 2) throw PreconditionError("M must be >= 2");
  SidonWeightDivergence d;
  d.c = c;
  d.M = M;
  detail::CompensatedSum s;
  for (std::int64_t n = 2; n <= M; ++n) {
    const double x = static_cast<double>(n);
    s.add(1.0 / (x * std::pow(std::log(x), c)));
  }
  d.partial_sum = s.value();
  const double lm = std::log(static_cast<double>(M));
  const double l2 = std::numbers::ln2;
  d.integral_estimate =
      c == 1.0 ? std::log(lm) - std::log(l2)
               : (std::pow(lm, 1.0 - c) - std::pow(l2, 1.0 - c)) / (1.0 - c);
  return d;
}

}  // namespace pzbench::extremals
