#include "pzbench/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sum.hpp"

namespace pzbench::multipliers {

MultiplierSeq::MultiplierSeq(MultiplierForm form, std::int64_t horizon, Side side)
    : form_(form), horizon_(horizon), side_(side) {
  if (horizon < 1) throw PreconditionError("multiplier horizon must be >= 1");
}

MultiplierSeq MultiplierSeq::inverse_sqrt(std::int64_t horizon, Side side) {
  MultiplierSeq m(MultiplierForm::inverse_sqrt, horizon, side);
  m.sup_ = 1.0;
  return m;
}

MultiplierSeq MultiplierSeq::indicator(spectra::FrequencySet set,
                                       std::int64_t horizon) {
  if (set.dim() != 1) throw PreconditionError("indicator set must be 1D");
  MultiplierSeq m(MultiplierForm::indicator, horizon, Side::both);
  m.sup_ = set.empty() ? 0.0 : 1.0;
  m.set_ = std::move(set);
  return m;
}

MultiplierSeq MultiplierSeq::table(std::map<std::int64_t, Complex> values,
                                   std::int64_t horizon) {
  MultiplierSeq m(MultiplierForm::table, horizon, Side::both);
  for (auto it = values.begin(); it != values.end();) {
    if (!std::isfinite(std::abs(it->second))) {
      throw PreconditionError("multiplier table values must be finite");
    }
    it = it->second == Complex{} ? values.erase(it) : std::next(it);
  }
  for (const auto& [n, v] : values) m.sup_ = std::max(m.sup_, std::abs(v));
  m.table_ = std::move(values);
  return m;
}

MultiplierSeq MultiplierSeq::constant(Complex value, std::int64_t horizon,
                                      Side side) {
  if (!std::isfinite(std::abs(value))) {
    throw PreconditionError("constant multiplier must be finite");
  }
  MultiplierSeq m(MultiplierForm::constant, horizon, side);
  m.constant_ = value;
  m.sup_ = std::abs(value);
  return m;
}

Complex MultiplierSeq::operator()(std::int64_t n) const {
  if (side_ == Side::nonnegative && n < 0) return {};
  switch (form_) {
    case MultiplierForm::inverse_sqrt:
      return n == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(std::abs(n)));
    case MultiplierForm::indicator:
      return set_.contains(n) ? 1.0 : 0.0;
    case MultiplierForm::table: {
      auto it = table_.find(n);
      return it == table_.end() ? Complex{} : it->second;
    }
    case MultiplierForm::constant:
      return constant_;
  }
  return {};
}

std::vector<std::int64_t> MultiplierSeq::finite_support() const {
  std::vector<std::int64_t> out;
  if (form_ == MultiplierForm::indicator) out = set_.values_1d();
  if (form_ == MultiplierForm::table) {
    for (const auto& [n, v] : table_) out.push_back(n);
  }
  return out;
}

std::string MultiplierSeq::describe() const {
  std::ostringstream os;
  os << to_string(form_);
  switch (form_) {
    case MultiplierForm::indicator:
      os << "(|set|=" << set_.size() << ")";
      break;
    case MultiplierForm::table:
      os << "(|table|=" << table_.size() << ")";
      break;
    case MultiplierForm::constant:
      os << "(" << constant_.real() << (constant_.imag() < 0 ? "" : "+")
         << constant_.imag() << "i)";
      break;
    case MultiplierForm::inverse_sqrt:
      break;
  }
  os << " side=" << to_string(side_) << " horizon=" << horizon_;
  return os.str();
}

int max_block_for_horizon(std::int64_t horizon) {
  int k = -1;
  while (k + 2 < 62 && (std::int64_t{1} << (k + 2)) <= horizon) ++k;
  return k;
}

PaleyReport paley_block_sums(const MultiplierSeq& m, int max_block,
                             BlockConvention convention) {
  if (max_block < 0) throw PreconditionError("max_block must be >= 0");
  if (max_block > 60 ||
      (std::int64_t{1} << (max_block + 1)) > m.horizon()) {
    throw PreconditionError(
        "horizon " + std::to_string(m.horizon()) + " too small for block " +
        std::to_string(max_block) + "; need 2^(K+1) <= horizon");
  }
  PaleyReport r;
  r.convention = convention;
  const auto nblocks = static_cast<std::size_t>(max_block) + 1;
  std::vector<detail::CompensatedSum> sums(nblocks);

  auto in_block = [&](std::int64_t a, int k) {
    const std::int64_t lo = std::int64_t{1} << k;
    return convention == BlockConvention::inclusive ? (a >= lo && a <= 2 * lo)
                                                    : (a >= lo && a < 2 * lo);
  };

  if (m.form() == MultiplierForm::indicator || m.form() == MultiplierForm::table) {
    for (std::int64_t n : m.finite_support()) {
      const std::int64_t a = std::abs(n);
      if (a == 0) continue;
      const double w = std::norm(m(n));
      if (w == 0.0) continue;
      const int top = spectra::block_index(spectra::BlockScheme::signed_dyadic, a);
      for (int k = std::max(0, top - 1); k <= std::min(max_block, top); ++k) {
        if (in_block(a, k)) sums[static_cast<std::size_t>(k)].add(w);
      }
    }
  } else {
    for (int k = 0; k <= max_block; ++k) {
      const std::int64_t lo = std::int64_t{1} << k;
      const std::int64_t hi =
          convention == BlockConvention::inclusive ? 2 * lo : 2 * lo - 1;
      auto& s = sums[static_cast<std::size_t>(k)];
      for (std::int64_t a = lo; a <= hi; ++a) {
        s.add(std::norm(m(a)));
        s.add(std::norm(m(-a)));
      }
    }
  }

  r.block_sums.resize(nblocks);
  for (std::size_t k = 0; k < nblocks; ++k) {
    r.block_sums[k] = sums[k].value();
    if (r.block_sums[k] > r.sup) {
      r.sup = r.block_sums[k];
      r.argsup = static_cast<int>(k);
    }
  }

  const int steps = std::max(2, (max_block + 3) / 4);
  const int k0 = max_block - steps;
  r.window_start = std::max(k0, 0);
  if (k0 >= 0) {
    const auto& s = r.block_sums;
    bool increasing = true;
    for (int k = k0 + 1; k <= max_block; ++k) {
      if (!(s[static_cast<std::size_t>(k)] > s[static_cast<std::size_t>(k - 1)])) {
        increasing = false;
      }
    }
    const double start = s[static_cast<std::size_t>(k0)];
    r.tail_growth = start > 0.0 ? s.back() / start : 0.0;
    if (increasing && start > 0.0 && r.tail_growth >= 4.0) {
      r.verdict = PaleyVerdict::diverging;
    }
  }
  return r;
}

torus::TrigPoly apply(const MultiplierSeq& m, const torus::TrigPoly& p) {
  if (p.dim() != 1) throw PreconditionError("apply requires a 1D polynomial");
  if (p.degree() > m.horizon()) {
    throw PreconditionError("polynomial degree " + std::to_string(p.degree()) +
                            " exceeds multiplier horizon " +
                            std::to_string(m.horizon()));
  }
  torus::TrigPoly out(1);
  for (const auto& [n, c] : p) out.set(n, m(n[0]) * c);
  return out;
}

H1PaleyRatio h1_paley_ratio(const MultiplierSeq& m, const torus::TrigPoly& p) {
  H1PaleyRatio r;
  torus::TrigPoly g = p;
  r.zero_mode = std::abs(p[0]);
  g.set(0, 0.0);
  r.lhs = torus::weighted_l2(g, m);
  r.rhs = torus::periodic_square_function_norm(g);
  if (r.rhs > 0.0) {
    r.ratio = r.lhs / r.rhs;
  } else {
    r.degenerate = r.lhs > 0.0;
  }
  return r;
}

const char* to_string(MultiplierForm f) {
  switch (f) {
    case MultiplierForm::inverse_sqrt: return "inverse-sqrt";
    case MultiplierForm::indicator: return "indicator";
    case MultiplierForm::table: return "table";
    case MultiplierForm::constant: return "constant";
  }
  return "?";
}

const char* to_string(PaleyVerdict v) {
  return v == PaleyVerdict::diverging ? "diverging" : "bounded-up-to-horizon";
}

const char* to_string(BlockConvention c) {
  return c == BlockConvention::inclusive ? "inclusive" : "half-open";
}

const char* to_string(Side s) {
  return s == Side::both ? "both" : "nonnegative";
}

}  // namespace pzbench::multipliers
