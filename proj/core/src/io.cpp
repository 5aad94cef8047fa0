#include "pzbench/io.hpp"

#include <string>

namespace pzbench::io {
namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw PreconditionError(std::string("missing JSON field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

json frequency(const torus::Frequency& n) {
  json a = json::array();
  for (std::int64_t v : n.coords()) a.push_back(v);
  return a;
}

torus::Frequency frequency_from(const json& j, std::size_t dim) {
  std::vector<std::int64_t> c;
  if (j.is_number_integer()) {
    c.push_back(j.get<std::int64_t>());
  } else if (j.is_array()) {
    for (const auto& v : j) c.push_back(v.get<std::int64_t>());
  } else {
    throw PreconditionError("frequency must be an integer or an array of integers");
  }
  if (c.size() != dim) throw PreconditionError("frequency arity does not match dim");
  return torus::Frequency(std::span<const std::int64_t>(c));
}

multipliers::Side side_from(const std::string& s) {
  if (s == "both") return multipliers::Side::both;
  if (s == "nonnegative") return multipliers::Side::nonnegative;
  throw PreconditionError("unknown side '" + s + "'");
}

}  // namespace

json to_json(const torus::TrigPoly& p) {
  json entries = json::array();
  for (const auto& [n, c] : p) {
    entries.push_back({{"n", frequency(n)}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"dim", p.dim()}, {"entries", entries}};
}

torus::TrigPoly trig_poly_from_json(const json& j) {
  const auto dim = field<std::size_t>(j, "dim");
  torus::TrigPoly p(dim);
  for (const auto& e : field<json>(j, "entries")) {
    const double im = e.contains("im") ? field<double>(e, "im") : 0.0;
    p.add(frequency_from(field<json>(e, "n"), dim), Complex(field<double>(e, "re"), im));
  }
  return p;
}

json to_json(const spectra::FrequencySet& s) {
  json el = json::array();
  for (const auto& n : s) el.push_back(frequency(n));
  return {{"dim", s.dim()}, {"elements", el}};
}

spectra::FrequencySet frequency_set_from_json(const json& j) {
  const auto dim = field<std::size_t>(j, "dim");
  spectra::FrequencySet s(dim);
  for (const auto& e : field<json>(j, "elements")) s.insert(frequency_from(e, dim));
  return s;
}

json to_json(const multipliers::MultiplierSeq& m) {
  json params = json::object();
  params["side"] = multipliers::to_string(m.side());
  switch (m.form()) {
    case multipliers::MultiplierForm::indicator:
      params["set"] = to_json(m.indicator_set());
      break;
    case multipliers::MultiplierForm::table: {
      json t = json::array();
      for (const auto& [n, v] : m.table_values()) {
        t.push_back({{"n", n}, {"re", v.real()}, {"im", v.imag()}});
      }
      params["table"] = t;
      break;
    }
    case multipliers::MultiplierForm::constant:
      params["re"] = m.constant_value().real();
      params["im"] = m.constant_value().imag();
      break;
    case multipliers::MultiplierForm::inverse_sqrt:
      break;
  }
  return {{"form", multipliers::to_string(m.form())},
          {"params", params},
          {"horizon", m.horizon()}};
}

multipliers::MultiplierSeq multiplier_from_json(const json& j) {
  using multipliers::MultiplierSeq;
  const auto form = field<std::string>(j, "form");
  const auto horizon = field<std::int64_t>(j, "horizon");
  const json params = j.contains("params") ? j.at("params") : json::object();
  const auto side = side_from(params.value("side", std::string("both")));
  if (form == "inverse-sqrt") return MultiplierSeq::inverse_sqrt(horizon, side);
  if (form == "indicator") {
    return MultiplierSeq::indicator(frequency_set_from_json(field<json>(params, "set")),
                                    horizon);
  }
  if (form == "table") {
    std::map<std::int64_t, Complex> t;
    for (const auto& e : field<json>(params, "table")) {
      t[field<std::int64_t>(e, "n")] =
          Complex(field<double>(e, "re"), e.value("im", 0.0));
    }
    return MultiplierSeq::table(std::move(t), horizon);
  }
  if (form == "constant") {
    return MultiplierSeq::constant(
        Complex(params.value("re", 1.0), params.value("im", 0.0)), horizon, side);
  }
  throw PreconditionError("unknown multiplier form '" + form + "'");
}

json to_json(const multipliers::PaleyReport& r) {
  return {{"block_sums", r.block_sums},
          {"sup", r.sup},
          {"argsup", r.argsup},
          {"verdict", multipliers::to_string(r.verdict)},
          {"tail_growth", r.tail_growth},
          {"window_start", r.window_start},
          {"convention", multipliers::to_string(r.convention)}};
}

json to_json(const zygmund::ZygmundReport& r) {
  return {{"lhs", r.lhs},
          {"rhs", r.rhs},
          {"ratio", r.ratio},
          {"grid", r.grid},
          {"multiplier", r.multiplier}};
}

json to_json(const zygmund::GreedySelection& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks) {
    blocks.push_back({{"k", b.block}, {"lambda", b.lambda}, {"modulus", b.modulus}});
  }
  return {{"blocks", blocks}, {"skipped_zero_mode", s.skipped_zero_mode}};
}

json to_json(const extremals::SharpnessTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    rows.push_back({{"N", row.N},
                    {"grid", row.grid},
                    {"L", row.l},
                    {"phi", row.phi},
                    {"ratio", row.ratio}});
  }
  return {{"r", t.r},
          {"rows", rows},
          {"l_slope", t.l_slope},
          {"phi_slope", t.phi_slope},
          {"ratio_spread", t.ratio_spread},
          {"ratio_growth", t.ratio_growth}};
}

json to_json(const growth::GrowthReport& r) {
  return {{"spectrum", r.spectrum},
          {"spectrum_size", r.spectrum_size},
          {"ensemble",
           {{"kind", growth::to_string(r.ensemble.kind)},
            {"seed", r.ensemble.seed},
            {"trials", r.ensemble.trials}}},
          {"p_grid", r.p_grid},
          {"ratios", r.ratios},
          {"exponent", r.exponent},
          {"intercept", r.intercept},
          {"degenerate", r.degenerate},
          {"grid", r.grid},
          {"bound", "lower (ensemble maximum)"}};
}

json to_json(const realline::PaleyMeasure& m) {
  json j;
  if (m.kind() == realline::PaleyMeasure::Kind::atoms) {
    j["kind"] = "atoms";
    json a = json::array();
    for (const auto& at : m.atoms()) a.push_back({{"xi", at.xi}, {"weight", at.weight}});
    j["atoms"] = a;
  } else {
    j["kind"] = "dyadic-density";
    j["profile"] = realline::to_string(m.profile());
    json b = json::array();
    for (const auto& bl : m.blocks()) b.push_back({{"k", bl.k}, {"weight", bl.weight}});
    j["blocks"] = b;
  }
  j["gap"] = m.gap() ? json(*m.gap()) : json(nullptr);
  return j;
}

realline::PaleyMeasure measure_from_json(const json& j) {
  using realline::PaleyMeasure;
  const auto kind = field<std::string>(j, "kind");
  std::optional<double> gap;
  if (j.contains("gap") && !j.at("gap").is_null()) gap = field<double>(j, "gap");
  if (kind == "atoms") {
    std::vector<realline::Atom> atoms;
    for (const auto& a : field<json>(j, "atoms")) {
      atoms.push_back({field<double>(a, "xi"), field<double>(a, "weight")});
    }
    return PaleyMeasure::from_atoms(std::move(atoms), gap);
  }
  if (kind == "dyadic-density") {
    const auto profile = j.value("profile", std::string("uniform"));
    realline::DensityProfile p;
    if (profile == "uniform") {
      p = realline::DensityProfile::uniform;
    } else if (profile == "inverse-abs") {
      p = realline::DensityProfile::inverse_abs;
    } else {
      throw PreconditionError("unknown density profile '" + profile + "'");
    }
    std::vector<realline::DensityBlock> blocks;
    for (const auto& b : field<json>(j, "blocks")) {
      blocks.push_back({field<int>(b, "k"), field<double>(b, "weight")});
    }
    return PaleyMeasure::from_blocks(std::move(blocks), p, gap);
  }
  throw PreconditionError("unknown measure kind '" + kind + "'");
}

json to_json(const realline::PaleySupReport& r) {
  return {{"k_lo", r.range.lo},
          {"k_hi", r.range.hi},
          {"masses", r.masses},
          {"sup", r.sup},
          {"argsup", r.argsup},
          {"diverging", r.diverging}};
}

}  // namespace pzbench::io
