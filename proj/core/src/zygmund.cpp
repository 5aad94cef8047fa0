#include "pzbench/zygmund.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "sum.hpp"

namespace pzbench::zygmund {

double GreedySelection::energy() const {
  detail::CompensatedSum s;
  for (const SelectedBlock& b : blocks) s.add(b.modulus * b.modulus);
  return s.value();
}

GreedySelection dyadic_max_select(const torus::TrigPoly& p) {
  if (p.dim() != 1) throw PreconditionError("dyadic_max_select needs 1D input");
  GreedySelection sel;
  std::map<int, SelectedBlock> best;
  for (const auto& [freq, c] : p) {
    const std::int64_t n = freq[0];
    if (n < 0) {
      throw PreconditionError("dyadic_max_select needs support in N_0; got " +
                              std::to_string(n));
    }
    const double a = std::abs(c);
    if (n == 0) {
      sel.skipped_zero_mode = a;
      continue;
    }
    const int k = spectra::block_index(spectra::BlockScheme::shifted, n);
    auto [it, fresh] = best.try_emplace(k, SelectedBlock{k, n, a});
    // Map iteration is in increasing n, so only a strict improvement moves
    // the choice: ties keep the smallest frequency.
    if (!fresh && a > it->second.modulus) it->second = SelectedBlock{k, n, a};
  }
  sel.blocks.reserve(best.size());
  for (const auto& [k, b] : best) sel.blocks.push_back(b);
  return sel;
}

std::pair<torus::TrigPoly, torus::TrigPoly> split_by_sign(const torus::TrigPoly& p) {
  if (p.dim() != 1) throw PreconditionError("split_by_sign needs 1D input");
  torus::TrigPoly pos(1), neg(1);
  for (const auto& [n, c] : p) {
    if (n[0] >= 0) {
      pos.set(n, c);
    } else {
      neg.set(-n[0], c);
    }
  }
  return {std::move(pos), std::move(neg)};
}

namespace {

spectra::LacunarySeq verified_half(const std::vector<SelectedBlock>& half,
                                   const char* name) {
  std::vector<std::int64_t> terms;
  terms.reserve(half.size());
  for (const SelectedBlock& b : half) terms.push_back(b.lambda);
  if (terms.empty()) return {};

  const auto verdict = spectra::is_lacunary_with_ratio_in(
      terms, kSplitRatioLow, kSplitRatioHigh);
  if (!verdict.holds && verdict.inf_ratio < kSplitRatioLow) {
    throw VerificationFailure(
        std::string(name) + " half has ratio " +
        std::to_string(verdict.inf_ratio) + " < 2 at (" +
        std::to_string(verdict.witness->first) + ", " +
        std::to_string(verdict.witness->second) + ")");
  }
  for (std::size_t i = 0; i + 1 < half.size(); ++i) {
    if (half[i + 1].block != half[i].block + 2) continue;
    const double r = static_cast<double>(half[i + 1].lambda) /
                     static_cast<double>(half[i].lambda);
    if (r > kSplitRatioHigh) {
      throw VerificationFailure(
          std::string(name) + " half has adjacent-block ratio " +
          std::to_string(r) + " > 16 at (" + std::to_string(half[i].lambda) +
          ", " + std::to_string(half[i + 1].lambda) + ")");
    }
  }
  return spectra::LacunarySeq(std::move(terms));
}

}  // namespace

LacunarySplit even_odd_split(const GreedySelection& selection) {
  std::vector<SelectedBlock> even, odd;
  for (const SelectedBlock& b : selection.blocks) {
    if (b.block < 1) throw PreconditionError("selection blocks must have k >= 1");
    (b.block % 2 == 0 ? even : odd).push_back(b);
  }
  return {verified_half(even, "even"), verified_half(odd, "odd")};
}

ZygmundReport zygmund_ratio(const torus::TrigPoly& p,
                            const multipliers::MultiplierSeq& m,
                            std::span<const std::size_t> grid) {
  if (p.dim() != 1) throw PreconditionError("zygmund_ratio needs 1D input");
  const int kmax = multipliers::max_block_for_horizon(m.horizon());
  if (kmax >= 0) {
    const auto report = multipliers::paley_block_sums(m, kmax);
    if (report.verdict == multipliers::PaleyVerdict::diverging) {
      throw PreconditionError("multiplier " + m.describe() +
                              " has diverging dyadic block sums");
    }
  }
  ZygmundReport r;
  r.grid.assign(grid.begin(), grid.end());
  r.multiplier = m.describe();
  r.lhs = torus::weighted_l2(p, m);
  const auto s = torus::synthesize(p, grid);
  r.rhs = 1.0 + torus::orlicz_functional(s, torus::OrliczExponent(0.5));
  r.ratio = r.lhs / r.rhs;
  return r;
}

ZygmundReport inverse_sqrt_zygmund_check(const torus::TrigPoly& p,
                                         std::span<const std::size_t> grid) {
  const auto m = multipliers::MultiplierSeq::inverse_sqrt(
      std::max<std::int64_t>(2, p.degree()));
  return zygmund_ratio(p, m, grid);
}

}  // namespace pzbench::zygmund
