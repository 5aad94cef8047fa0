#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pzbench/extremals.hpp"
#include "pzbench/growth.hpp"
#include "pzbench/io.hpp"
#include "pzbench/multipliers.hpp"
#include "pzbench/realline.hpp"
#include "pzbench/spectra.hpp"
#include "pzbench/torus.hpp"
#include "pzbench/zygmund.hpp"
#include "selftest.hpp"

namespace pzbench::cli {
namespace {

using multipliers::MultiplierSeq;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::int64_t to_int(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw PreconditionError("not an integer: '" + s + "'");
  return v;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw PreconditionError("bad JSON in '" + path + "': " + e.what());
  }
}

// lacunary:<ratio>:<count>[:<start>] | bonami:<order>:<ratio>:<count> |
// list:<n>,<n>,... | file:<path>
spectra::FrequencySet parse_spectrum(const std::string& spec, std::size_t cap) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "file") return io::frequency_set_from_json(read_json_file(rest));
  if (kind == "list") {
    std::vector<std::int64_t> v;
    for (const auto& s : split(rest, ',')) v.push_back(to_int(s));
    return spectra::FrequencySet::from_1d(v);
  }
  const auto parts = split(rest, ':');
  if (kind == "lacunary" && (parts.size() == 2 || parts.size() == 3)) {
    const auto seq = spectra::geometric_lacunary(
        to_int(parts[0]), static_cast<std::size_t>(to_int(parts[1])),
        parts.size() == 3 ? to_int(parts[2]) : 1);
    return spectra::FrequencySet::from_1d(seq.terms());
  }
  if (kind == "bonami" && parts.size() == 3) {
    const auto base = spectra::geometric_lacunary(to_int(parts[1]),
                                                  static_cast<std::size_t>(to_int(parts[2])));
    return spectra::sumset_bonami(base, static_cast<std::size_t>(to_int(parts[0])), cap).elements;
  }
  throw PreconditionError("unknown spectrum '" + spec +
                          "'; use lacunary:R:N[:S], bonami:K:R:N, list:a,b,... or file:PATH");
}

// uniform:<klo>:<khi>[:<w>] | inverse-abs:<klo>:<khi> | atoms-dyadic:<klo>:<khi>[:<w>] |
// file:<path>. gap < 0 leaves the gap undeclared.
realline::PaleyMeasure parse_measure(const std::string& spec, double gap_value) {
  std::optional<double> gap;
  if (gap_value >= 0.0) gap = gap_value;
  const auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "file") {
    json j = read_json_file(parts[1]);
    if (gap && !j.contains("gap")) j["gap"] = *gap;
    return io::measure_from_json(j);
  }
  if (parts.size() >= 3) {
    const int lo = static_cast<int>(to_int(parts[1])), hi = static_cast<int>(to_int(parts[2]));
    const double w = parts.size() >= 4 ? std::stod(parts[3]) : 1.0;
    if (lo > hi) throw PreconditionError("measure block range is empty");
    if (parts[0] == "inverse-abs") return realline::PaleyMeasure::inverse_abs(lo, hi, gap);
    if (parts[0] == "uniform") {
      std::vector<realline::DensityBlock> b;
      for (int k = lo; k <= hi; ++k) b.push_back({k, w});
      return realline::PaleyMeasure::from_blocks(b, realline::DensityProfile::uniform, gap);
    }
    if (parts[0] == "atoms-dyadic") {
      std::vector<realline::Atom> a;
      for (int k = lo; k <= hi; ++k) a.push_back({1.5 * std::ldexp(1.0, k), w});
      return realline::PaleyMeasure::from_atoms(a, gap);
    }
  }
  throw PreconditionError("unknown measure '" + spec +
                          "'; use uniform:KLO:KHI[:W], inverse-abs:KLO:KHI, "
                          "atoms-dyadic:KLO:KHI[:W] or file:PATH");
}

Report start(const std::string& name, const json& cfg, std::vector<std::string> columns) {
  Report r;
  r.subcommand = name;
  r.config = cfg;
  r.columns = std::move(columns);
  return r;
}

// ---------------------------------------------------------------------------

Report paley_check(const json& c) {
  const int K = c.at("k").get<int>();
  if (K < 0 || K > 60) throw PreconditionError("k must lie in [0, 60]");
  const std::int64_t horizon = std::int64_t{1} << (K + 1);
  const auto side_s = c.at("side").get<std::string>();
  const auto side = side_s == "both" ? multipliers::Side::both : multipliers::Side::nonnegative;
  if (side_s != "both" && side_s != "nonnegative") throw PreconditionError("side is both|nonnegative");
  const auto conv_s = c.at("convention").get<std::string>();
  if (conv_s != "inclusive" && conv_s != "half-open") {
    throw PreconditionError("convention is inclusive|half-open");
  }
  const auto conv = conv_s == "inclusive" ? multipliers::BlockConvention::inclusive
                                          : multipliers::BlockConvention::half_open;

  const auto form = c.at("form").get<std::string>();
  const auto file = c.at("multiplier").get<std::string>();
  MultiplierSeq m = MultiplierSeq::inverse_sqrt(horizon, side);
  if (!file.empty()) {
    m = io::multiplier_from_json(read_json_file(file));
  } else if (form == "inverse-sqrt") {
  } else if (form == "constant") {
    m = MultiplierSeq::constant(c.at("value").get<double>(), horizon, side);
  } else if (form == "indicator") {
    const auto set_s = c.at("set").get<std::string>();
    spectra::FrequencySet set(1);
    if (set_s == "powers-of-two") {
      for (int k = 0; k <= K + 1; ++k) set.insert(std::int64_t{1} << k);
    } else {
      set = parse_spectrum(set_s, spectra::kDefaultProductCap);
    }
    m = MultiplierSeq::indicator(set, horizon);
  } else {
    throw PreconditionError("form is inverse-sqrt|constant|indicator (or use --multiplier FILE)");
  }

  const auto rep = multipliers::paley_block_sums(m, K, conv);
  Report r = start("paley-check", c, {"k", "block_lo", "block_hi", "block_sum"});
  for (int k = 0; k <= K; ++k) {
    const std::int64_t lo = std::int64_t{1} << k;
    r.rows.push_back({k, lo, conv == multipliers::BlockConvention::inclusive ? 2 * lo : 2 * lo - 1,
                      rep.block_sums[static_cast<std::size_t>(k)]});
  }
  r.provenance = {{"multiplier", io::to_json(m)},
                  {"description", m.describe()},
                  {"report", io::to_json(rep)}};
  r.verdicts.push_back({"Paley condition bounded up to horizon",
                        rep.verdict == multipliers::PaleyVerdict::bounded_up_to_horizon,
                        "sup " + std::to_string(rep.sup) + " at k = " + std::to_string(rep.argsup) +
                            ", tail growth " + std::to_string(rep.tail_growth)});
  return r;
}

torus::TrigPoly family_poly(const json& c) {
  const auto file = c.at("poly").get<std::string>();
  if (!file.empty()) return io::trig_poly_from_json(read_json_file(file));
  const auto family = c.at("family").get<std::string>();
  const auto n = c.at("n").get<std::int64_t>();
  if (family == "vallee-poussin") return extremals::vallee_poussin(static_cast<int>(n));
  if (family == "fejer") return extremals::fejer(n);
  if (family == "character") {
    torus::TrigPoly p(1);
    p.set(n, 1.0);
    return p;
  }
  if (family == "random") {
    if (n < 1 || n > 24) throw PreconditionError("random family needs 1 <= n <= 24 blocks");
    auto rng = growth::trial_rng(c.at("seed").get<std::uint64_t>(), 0);
    torus::TrigPoly p(1);
    for (int k = 1; k <= n; ++k) {
      const auto [lo, hi] = spectra::block_bounds(spectra::BlockScheme::shifted, k);
      const int count = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < count; ++i) {
        const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
        const double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
        p.set(lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1)),
              Complex(re, im + 1e-3));
      }
    }
    return p;
  }
  throw PreconditionError("family is vallee-poussin|fejer|character|random (or --poly FILE)");
}

Report zygmund_ratio(const json& c) {
  const torus::TrigPoly p = family_poly(c);
  if (p.dim() != 1) throw PreconditionError("zygmund-ratio needs a 1D polynomial");
  auto grid = static_cast<std::size_t>(c.at("grid").get<std::int64_t>());
  if (grid == 0) {
    grid = std::max(torus::minimum_grid_size(p.degree()),
                    torus::next_pow2_above(8 * static_cast<std::size_t>(p.degree())));
  }
  const std::size_t sizes[] = {grid};
  const auto mfile = c.at("multiplier").get<std::string>();
  const auto m = mfile == "inverse-sqrt"
                     ? MultiplierSeq::inverse_sqrt(std::max<std::int64_t>(2, p.degree()))
                     : io::multiplier_from_json(read_json_file(mfile));
  const auto z = zygmund::zygmund_ratio(p, m, sizes);

  Report r = start("zygmund-ratio", c, {"degree", "grid", "lhs", "rhs", "ratio"});
  r.rows.push_back({p.degree(), grid, z.lhs, z.rhs, z.ratio});
  r.provenance = {{"report", io::to_json(z)}, {"support_size", p.size()}};

  Verdict v{"greedy selection splits into lacunary halves with ratios in [2, 16]", true, "verified"};
  try {
    const auto [pos, neg] = zygmund::split_by_sign(p);
    json sel = json::array();
    for (const auto* half : {&pos, &neg}) {
      const auto s = zygmund::dyadic_max_select(*half);
      zygmund::even_odd_split(s);
      sel.push_back(io::to_json(s));
    }
    r.provenance["selection"] = sel;
  } catch (const VerificationFailure& e) {
    v.pass = false;
    v.detail = e.what();
  }
  r.verdicts.push_back(v);
  return r;
}

Report sharpness(const json& c) {
  const auto rs = c.at("r").get<std::vector<double>>();
  const auto t = extremals::sharpness_experiment(
      c.at("n-min").get<int>(), c.at("n-max").get<int>(), rs,
      static_cast<std::size_t>(c.at("oversample").get<std::int64_t>()));
  std::vector<std::string> cols = {"N", "grid", "L_N"};
  for (double r : rs) cols.push_back("phi_" + io::json(r).dump());
  for (double r : rs) cols.push_back("ratio_" + io::json(r).dump());
  Report rep = start("sharpness", c, cols);
  for (const auto& row : t.rows) {
    std::vector<json> v = {row.N, row.grid, row.l};
    for (double x : row.phi) v.push_back(x);
    for (double x : row.ratio) v.push_back(x);
    rep.rows.push_back(std::move(v));
  }
  rep.provenance = {{"l_slope", t.l_slope},
                    {"phi_slope", t.phi_slope},
                    {"ratio_spread", t.ratio_spread},
                    {"ratio_growth", t.ratio_growth},
                    {"oversample", c.at("oversample")}};
  const double target = c.at("slope-target").get<double>(), tol = c.at("slope-tol").get<double>();
  rep.verdicts.push_back({"slope of log L_N vs log N within tolerance",
                          std::abs(t.l_slope - target) <= tol, std::to_string(t.l_slope)});
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] == 0.5) {
      rep.verdicts.push_back({"ratio spread at r = 1/2 within bound",
                              t.ratio_spread[i] <= c.at("spread-max").get<double>(),
                              std::to_string(t.ratio_spread[i])});
    }
    if (rs[i] == 0.25) {
      rep.verdicts.push_back({"ratio growth at r = 1/4 above bound",
                              t.ratio_growth[i] >= c.at("growth-min").get<double>(),
                              std::to_string(t.ratio_growth[i])});
    }
  }
  return rep;
}

Report ingham(const json& c) {
  const extremals::InghamParams params{c.at("gamma").get<double>(), c.at("c").get<double>()};
  std::vector<std::int64_t> horizons;
  for (int e = c.at("log2-m-min").get<int>(); e <= c.at("log2-m-max").get<int>(); ++e) {
    if (e < 2 || e > 24) throw PreconditionError("log2 horizons must lie in [2, 24]");
    horizons.push_back(std::int64_t{1} << e);
  }
  const auto tails = extremals::ingham_tails(
      params, horizons, static_cast<std::size_t>(c.at("oversample").get<std::int64_t>()));
  Report r = start("ingham", c, {"M", "grid", "tail_sup"});
  bool decreasing = true;
  for (std::size_t i = 0; i < tails.size(); ++i) {
    r.rows.push_back({tails[i].M, tails[i].grid, tails[i].sup});
    if (i > 0 && !(tails[i].sup < tails[i - 1].sup)) decreasing = false;
  }
  const auto d = extremals::sidon_weight_divergence(params.c, c.at("sum-horizon").get<std::int64_t>());
  r.provenance = {{"partial_sum", d.partial_sum},
                  {"integral_estimate", d.integral_estimate},
                  {"relative_gap", d.relative_gap()}};
  r.verdicts.push_back({"tail sup norms strictly decrease", decreasing, ""});
  r.verdicts.push_back({"partial sum exceeds sum-min", d.partial_sum > c.at("sum-min").get<double>(),
                        std::to_string(d.partial_sum)});
  r.verdicts.push_back({"partial sum matches the integral estimate",
                        d.relative_gap() <= c.at("sum-rel-tol").get<double>(),
                        std::to_string(d.relative_gap())});
  return r;
}

growth::Ensemble ensemble_of(const json& c) {
  return {growth::ensemble_kind_from_string(c.at("ensemble").get<std::string>()),
          c.at("seed").get<std::uint64_t>(),
          static_cast<std::size_t>(c.at("trials").get<std::int64_t>())};
}

json ensemble_json(const growth::Ensemble& e) {
  return {{"kind", growth::to_string(e.kind)}, {"seed", e.seed}, {"trials", e.trials},
          {"bound", "lower (ensemble maximum)"}};
}

Report lambda_p(const json& c) {
  const auto cap = static_cast<std::size_t>(c.at("cap").get<std::int64_t>());
  const auto set = parse_spectrum(c.at("spectrum").get<std::string>(), cap);
  const auto e = ensemble_of(c);
  Report r = start("lambda-p", c, {"p", "ratio", "best_trial", "grid_points"});
  for (double p : c.at("p").get<std::vector<double>>()) {
    const auto res = growth::lambda_p_ratio(set, p, e);
    std::size_t pts = 1;
    for (auto g : res.grid) pts *= g;
    r.rows.push_back({p, res.ratio, res.best_trial, pts});
  }
  r.provenance = {{"spectrum_size", set.size()}, {"spectrum_dim", set.dim()},
                  {"ensemble", ensemble_json(e)}, {"cap", cap}};
  return r;
}

Report bonami(const json& c) {
  const auto ps = c.at("p").get<std::vector<int>>();
  const auto e = ensemble_of(c);
  const auto cap = static_cast<std::size_t>(c.at("cap").get<std::int64_t>());
  const auto base = spectra::geometric_lacunary(c.at("ratio").get<std::int64_t>(),
                                                static_cast<std::size_t>(c.at("terms").get<std::int64_t>()));
  std::vector<std::string> cols = {"spectrum", "dim", "size", "exponent", "intercept", "degenerate"};
  for (int p : ps) cols.push_back("ratio_p" + std::to_string(p));
  Report r = start("bonami", c, cols);
  auto add = [&](const std::string& name, const growth::GrowthReport& g) {
    std::vector<json> row = {name, g.grid.size(), g.spectrum_size, g.exponent, g.intercept,
                             g.degenerate ? 1 : 0};
    for (double x : g.ratios) row.push_back(x);
    r.rows.push_back(std::move(row));
  };
  std::vector<double> alphas;
  json terms_used = json::array();
  for (int k = 1; k <= c.at("order-max").get<int>(); ++k) {
    const auto s = spectra::sumset_bonami(base, static_cast<std::size_t>(k), cap);
    terms_used.push_back(s.terms_used);
    const auto g = growth::growth_exponent(s.elements, ps, e);
    alphas.push_back(g.exponent);
    add("order-" + std::to_string(k), g);
  }
  const auto pt = c.at("product-terms").get<std::int64_t>();
  if (pt > 0) {
    const auto f = spectra::geometric_lacunary(c.at("ratio").get<std::int64_t>(),
                                               static_cast<std::size_t>(pt));
    const spectra::FrequencySet one = spectra::FrequencySet::from_1d(f.terms());
    const spectra::FrequencySet factors[] = {one, one};
    add("product-2d", growth::tensor_growth(factors, ps, e));
  }
  r.provenance = {{"ensemble", ensemble_json(e)}, {"cap", cap}, {"terms_used", terms_used}};
  const double gap = c.at("min-gap").get<double>();
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    r.verdicts.push_back({"exponent gap order " + std::to_string(i + 1) + " vs " + std::to_string(i),
                          alphas[i] - alphas[i - 1] >= gap, std::to_string(alphas[i] - alphas[i - 1])});
  }
  return r;
}

Report sidon_lb(const json& c) {
  const auto set = parse_spectrum(c.at("spectrum").get<std::string>(),
                                  static_cast<std::size_t>(c.at("cap").get<std::int64_t>()));
  std::int64_t horizon = 1;
  for (const auto& n : set) horizon = std::max(horizon, std::abs(n[0]));
  const auto form = c.at("weight").get<std::string>();
  MultiplierSeq m = form == "inverse-sqrt" ? MultiplierSeq::inverse_sqrt(horizon)
                                           : MultiplierSeq::constant(1.0, horizon);
  if (form != "inverse-sqrt" && form != "constant") {
    throw PreconditionError("weight is constant|inverse-sqrt");
  }
  const auto e = ensemble_of(c);
  const auto b = growth::sidon_lower_bound(m, set, e,
                                           static_cast<std::size_t>(c.at("oversample").get<std::int64_t>()));
  Report r = start("sidon-lb", c, {"lower_bound", "best", "grid"});
  r.rows.push_back({b.value, b.best, b.grid});
  r.provenance = {{"spectrum_size", set.size()}, {"ensemble", ensemble_json(e)},
                  {"multiplier", m.describe()},
                  {"note", "grid sup norm; the bound is exact up to the grid sup-norm defect"}};
  return r;
}

realline::Interval support_of(const json& c) {
  const double half = c.at("support").get<double>();
  return {-half, half};
}

std::size_t samples_of(const json& c) {
  const int e = c.at("log2-samples").get<int>();
  if (e < 4 || e > 24) throw PreconditionError("log2-samples must lie in [4, 24]");
  return std::size_t{1} << e;
}

Report rline_paley(const json& c) {
  const auto mu = parse_measure(c.at("measure").get<std::string>(), c.at("gap").get<double>());
  const double L = c.at("half-width").get<double>();
  const auto corpus = realline::mean_zero_corpus(
      static_cast<std::size_t>(c.at("signals").get<std::int64_t>()), c.at("seed").get<std::uint64_t>(),
      L, samples_of(c), support_of(c));
  const auto p = realline::paley_inequality_probe(mu, corpus);
  Report r = start("rline-paley", c, {"signal", "ratio"});
  for (std::size_t i = 0; i < p.ratios.size(); ++i) r.rows.push_back({i, p.ratios[i]});
  const auto range = corpus.empty() ? realline::KRange{} : realline::default_k_range(corpus.front());
  r.provenance = {{"measure", io::to_json(mu)},
                  {"sup", io::to_json(realline::paley_sup(mu))},
                  {"analytic_bound", p.analytic_bound},
                  {"max_ratio", p.max_ratio},
                  {"argmax", p.argmax},
                  {"band", corpus.empty() ? 0.0 : corpus.front().band()},
                  {"k_range", {range.lo, range.hi}}};
  const double slack = c.at("slack").get<double>();
  r.verdicts.push_back({"max ratio within 2 sqrt(sup mu) (1 + slack)",
                        p.max_ratio <= p.analytic_bound * (1.0 + slack),
                        std::to_string(p.max_ratio) + " vs " + std::to_string(p.analytic_bound)});
  return r;
}

Report rline_zygmund(const json& c) {
  const double L = c.at("half-width").get<double>();
  const std::size_t M = samples_of(c);
  const auto K = support_of(c);
  const auto mode = c.at("mode").get<std::string>();
  if (mode == "remark") {
    const auto f = realline::raised_cosine_bump(L, M, K);
    const auto s = realline::low_block_sweep(f, c.at("k-top").get<int>(), c.at("k-low").get<int>());
    Report r = start("rline-zygmund", c, {"k_low", "cumulative", "increment"});
    for (std::size_t i = 0; i < s.k.size(); ++i) r.rows.push_back({s.k[i], s.cumulative[i], s.increments[i]});
    const double need = 0.4 * s.f0 * s.f0 * std::log(2.0);
    bool ok = true;
    for (std::size_t i = 1; i < s.increments.size(); ++i) ok = ok && s.increments[i] >= need;
    r.provenance = {{"f0", s.f0}, {"threshold", need}, {"signal", "raised-cosine bump on K"}};
    r.verdicts.push_back({"every added low block raises the norm by >= 0.4 |f^(0)|^2 ln 2", ok, ""});
    return r;
  }
  if (mode != "probe") throw PreconditionError("mode is probe|remark");
  const auto mu = parse_measure(c.at("measure").get<std::string>(), c.at("gap").get<double>());
  const auto corpus = realline::smooth_corpus(static_cast<std::size_t>(c.at("signals").get<std::int64_t>()),
                                              c.at("seed").get<std::uint64_t>(), L, M, K);
  Report r = start("rline-zygmund", c, {"signal", "lhs", "phi", "ratio"});
  double mx = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto z = realline::zygmund_realline_probe(mu, corpus[i], K);
    r.rows.push_back({i, z.lhs, z.phi, z.ratio});
    mx = std::max(mx, z.ratio);
  }
  r.provenance = {{"measure", io::to_json(mu)}, {"max_ratio", mx}};
  return r;
}

Report selftest_cmd(const json& c) {
  auto ids = c.at("criterion").get<std::vector<int>>();
  if (ids.empty()) ids = selftest::criterion_ids();
  Report r = start("selftest", c, {"criterion", "name", "pass", "seconds", "detail"});
  for (int id : ids) {
    selftest::CriterionResult res;
    try {
      res = selftest::run_criterion(id);
    } catch (const std::out_of_range&) {
      throw PreconditionError("unknown criterion " + std::to_string(id));
    }
    r.rows.push_back({id, res.name, res.pass() ? 1 : 0, res.seconds, selftest::summary_line(res)});
    r.verdicts.push_back({"criterion " + std::to_string(id) + ": " + res.name, res.pass(), ""});
  }
  return r;
}

using T = ParamType;

const std::vector<Param> kEnsembleParams = {
    {"ensemble", T::text, "random-signs", "random-signs|steinhaus|flat|phase-ascent"},
    {"seed", T::integer, 1, "master seed"},
    {"trials", T::integer, 16, "trials per estimate"},
    {"cap", T::integer, 4096, "sumset size cap"},
};

std::vector<Param> with_ensemble(std::vector<Param> p) {
  p.insert(p.end(), kEnsembleParams.begin(), kEnsembleParams.end());
  return p;
}

const std::vector<Param> kLineParams = {
    {"half-width", T::real, 256.0, "sampling window half width L"},
    {"log2-samples", T::integer, 16, "log2 of the sample count M"},
    {"support", T::real, 8.0, "signals live in [-support, support]"},
    {"signals", T::integer, 100, "corpus size"},
    {"seed", T::integer, 2024, "corpus seed"},
    {"measure", T::text, "uniform:-6:2", "uniform:KLO:KHI[:W], inverse-abs:KLO:KHI, atoms-dyadic:KLO:KHI[:W], file:PATH"},
    {"gap", T::real, 0.015625, "declared gap delta (negative: none)"},
};

std::vector<Param> with_line(std::vector<Param> p) {
  p.insert(p.end(), kLineParams.begin(), kLineParams.end());
  return p;
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> c = {
      {"paley-check", "dyadic block sums of a multiplier",
       {{"form", T::text, "inverse-sqrt", "inverse-sqrt|constant|indicator"},
        {"k", T::integer, 20, "largest block index K; horizon 2^(K+1)"},
        {"side", T::text, "nonnegative", "both|nonnegative"},
        {"convention", T::text, "inclusive", "inclusive|half-open blocks"},
        {"set", T::text, "powers-of-two", "indicator set: powers-of-two or a spectrum"},
        {"value", T::real, 1.0, "constant multiplier value"},
        {"multiplier", T::text, "", "multiplier JSON file (overrides form)"}},
       paley_check},
      {"zygmund-ratio", "weighted l2 over 1 + Phi_1/2",
       {{"family", T::text, "vallee-poussin", "vallee-poussin|fejer|character|random"},
        {"n", T::integer, 6, "family parameter (N, order, frequency or block count)"},
        {"seed", T::integer, 1, "seed for the random family"},
        {"poly", T::text, "", "TrigPoly JSON file (overrides family)"},
        {"multiplier", T::text, "inverse-sqrt", "inverse-sqrt or a multiplier JSON file"},
        {"grid", T::integer, 0, "grid size (0: 8x oversampling)"}},
       zygmund_ratio},
      {"sharpness", "de la Vallee Poussin sweep of L_N and Phi_r",
       {{"n-min", T::integer, 4, ""},
        {"n-max", T::integer, 14, ""},
        {"r", T::real_list, json::array({0.25, 0.5}), "Orlicz exponents"},
        {"oversample", T::integer, 8, "grid points per 2^(N+1)"},
        {"slope-target", T::real, 0.5, ""},
        {"slope-tol", T::real, 0.05, ""},
        {"spread-max", T::real, 2.0, ""},
        {"growth-min", T::real, 1.3, ""}},
       sharpness},
      {"ingham", "tail sup norms of the Ingham series and the weight sum",
       {{"gamma", T::real, 0.5, ""},
        {"c", T::real, 0.8, ""},
        {"log2-m-min", T::integer, 10, ""},
        {"log2-m-max", T::integer, 17, ""},
        {"oversample", T::integer, 8, ""},
        {"sum-horizon", T::integer, 1000000, ""},
        {"sum-min", T::real, 3.5, ""},
        {"sum-rel-tol", T::real, 0.05, ""}},
       ingham},
      {"lambda-p", "ensemble lower bounds on ||f||_p / ||f||_2",
       with_ensemble({{"spectrum", T::text, "lacunary:2:8", "lacunary:R:N[:S], bonami:K:R:N, list:..., file:PATH"},
                      {"p", T::real_list, json::array({4, 8, 16, 32, 64}), "even exponents"}}),
       lambda_p},
      {"bonami", "growth exponents of Bonami sumsets and products",
       with_ensemble({{"ratio", T::integer, 2, "base ratio"},
                      {"terms", T::integer, 8, "base terms"},
                      {"order-max", T::integer, 2, "largest sumset order"},
                      {"product-terms", T::integer, 6, "terms per factor of the 2D product (0: skip)"},
                      {"p", T::integer_list, json::array({4, 8, 16, 32, 64}), "even exponents"},
                      {"min-gap", T::real, 0.3, "required exponent gap between orders"}}),
       bonami},
      {"sidon-lb", "ensemble lower bound on a Sidon constant",
       {{"spectrum", T::text, "lacunary:2:8", "1D spectrum"},
        {"weight", T::text, "constant", "constant|inverse-sqrt"},
        {"ensemble", T::text, "phase-ascent", "random-signs|steinhaus|flat|phase-ascent"},
        {"seed", T::integer, 1, ""},
        {"trials", T::integer, 4, ""},
        {"cap", T::integer, 4096, ""},
        {"oversample", T::integer, 16, "sup-norm grid oversampling"}},
       sidon_lb},
      {"rline-paley", "H^1 Paley inequality probe on mean-zero signals",
       with_line({{"slack", T::real, 0.0, "relative slack on the analytic bound"}}), rline_paley},
      {"rline-zygmund", "L log^1/2 L probe (mode probe) or low-block sweep (mode remark)",
       with_line({{"mode", T::text, "probe", "probe|remark"},
                  {"k-top", T::integer, -4, "remark: top block"},
                  {"k-low", T::integer, -20, "remark: lowest block"}}),
       rline_zygmund},
      {"selftest", "run the acceptance suite",
       {{"criterion", T::integer_list, json::array(), "criteria to run (default all)"}},
       selftest_cmd},
  };
  return c;
}

const Command& find_command(const std::string& name) {
  for (const auto& c : commands()) {
    if (c.name == name) return c;
  }
  throw PreconditionError("unknown subcommand '" + name + "'");
}

}  // namespace pzbench::cli
