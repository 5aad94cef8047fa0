#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "pzbench/multipliers.hpp"
#include "pzbench/zygmund.hpp"

using namespace pzbench;
using namespace pzbench::zygmund;
using torus::TrigPoly;

namespace {

// Nonnegative support meeting every block k in [1, top] (a few entries each).
TrigPoly block_filling(std::mt19937_64& rng, int top) {
  TrigPoly p(1);
  p.set(0, gen::coefficient(rng));
  for (int k = 1; k <= top; ++k) {
    const auto [lo, hi] = spectra::block_bounds(spectra::BlockScheme::shifted, k);
    for (int i = 0; i < 3; ++i) p.set(gen::integer(rng, lo, hi), gen::coefficient(rng));
  }
  return p;
}

GreedySelection selection_at(std::int64_t (*lambda)(int), int top) {
  TrigPoly p(1);
  for (int k = 1; k <= top; ++k) p.set(lambda(k), 1.0);
  return dyadic_max_select(p);
}

}  // namespace

TEST(Greedy, TiesGoToSmallestFrequency) {
  TrigPoly p(1);
  p.set(3, 2.0);
  p.set(4, Complex(0.0, 2.0));
  p.set(6, 1.0);
  const auto s = dyadic_max_select(p);
  ASSERT_EQ(s.blocks.size(), 1u);
  EXPECT_EQ(s.blocks[0].block, 2);
  EXPECT_EQ(s.blocks[0].lambda, 3);
}

TEST(Greedy, ZeroModeOnly) {
  TrigPoly p(1);
  p.set(0, Complex(3.0, 4.0));
  const auto s = dyadic_max_select(p);
  EXPECT_TRUE(s.blocks.empty());
  EXPECT_DOUBLE_EQ(s.skipped_zero_mode, 5.0);
  EXPECT_THROW(dyadic_max_select(TrigPoly(1) + [] {
                 TrigPoly q(1);
                 q.set(-1, 1.0);
                 return q;
               }()),
               PreconditionError);
}

TEST(Split, BlockEndpointsStayInWindow) {
  for (auto lambda : {+[](int k) { return (std::int64_t{1} << k) - 1; },
                      +[](int k) { return (std::int64_t{2} << k) - 2; }}) {
    const auto split = even_odd_split(selection_at(lambda, 20));
    for (const auto* half : {&split.even, &split.odd}) {
      for (std::size_t i = 0; i + 1 < half->size(); ++i) {
        const double r = static_cast<double>((*half)[i + 1]) / static_cast<double>((*half)[i]);
        EXPECT_GE(r, 2.0);
        EXPECT_LE(r, 16.0);
      }
    }
  }
}

TEST(Split, SingleBlock) {
  TrigPoly p(1);
  p.set(5, 1.0);
  const auto split = even_odd_split(dyadic_max_select(p));
  EXPECT_EQ(split.even.size(), 1u);
  EXPECT_EQ(split.even[0], 5);
  EXPECT_TRUE(split.odd.empty());
}

TEST(Split, InconsistentSelectionIsAHardError) {
  GreedySelection s;
  s.blocks = {{1, 10, 1.0}, {3, 12, 1.0}};
  EXPECT_THROW(even_odd_split(s), VerificationFailure);
}

TEST(SplitProperty, RandomBlockFillingCorpus) {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 60; ++trial) {
    const TrigPoly p = block_filling(rng, static_cast<int>(gen::integer(rng, 1, 14)));
    const auto sel = dyadic_max_select(p);
    LacunarySplit split;
    ASSERT_NO_THROW(split = even_odd_split(sel));
    // Energy identity: the maxima over blocks are exactly the squares picked.
    double halves = 0.0;
    for (const auto* half : {&split.even, &split.odd}) {
      for (std::int64_t n : half->terms()) halves += std::norm(p[n]);
    }
    EXPECT_NEAR(sel.energy(), halves, 1e-13 * halves);
    for (const auto& b : sel.blocks) {
      const auto [lo, hi] = spectra::block_bounds(spectra::BlockScheme::shifted, b.block);
      for (std::int64_t n = lo; n <= hi; ++n) EXPECT_LE(std::abs(p[n]), b.modulus);
      EXPECT_EQ(std::abs(p[b.lambda]), b.modulus);
    }
  }
}

TEST(SplitBySign, ReflectsNegativeHalf) {
  TrigPoly p(1);
  p.set(-3, 1.0);
  p.set(0, 2.0);
  p.set(5, 3.0);
  const auto [pos, neg] = split_by_sign(p);
  EXPECT_EQ(pos.size(), 2u);
  EXPECT_EQ(neg[3], Complex(1.0));
}

TEST(ZygmundRatio, SingleCharacterClosedForm) {
  TrigPoly e(1);
  e.set(9, 1.0);
  spectra::FrequencySet s;
  s.insert(9);
  const std::size_t grid[] = {64};
  const auto r = zygmund_ratio(e, multipliers::MultiplierSeq::indicator(s, 16), grid);
  EXPECT_DOUBLE_EQ(r.lhs, 1.0);
  EXPECT_NEAR(r.rhs, 1.0 + std::sqrt(std::log(2.0)), 1e-14);
  EXPECT_NEAR(r.ratio, 0.5457, 1e-4);

  const auto z = zygmund_ratio(TrigPoly(1), multipliers::MultiplierSeq::inverse_sqrt(4), grid);
  EXPECT_EQ(z.ratio, 0.0);
  EXPECT_THROW(zygmund_ratio(e, multipliers::MultiplierSeq::constant(1.0, 1 << 12), grid),
               PreconditionError);
}

TEST(ZygmundProperty, InvariantUnderUnimodularScaling) {
  std::mt19937_64 rng(402);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly p = gen::poly_1d(rng, 0, 200, 0.2);
    const auto grid = torus::minimum_grid(p, 1024);
    const auto a = inverse_sqrt_zygmund_check(p, grid);
    const auto b = inverse_sqrt_zygmund_check(gen::unimodular(rng) * p, grid);
    EXPECT_NEAR(a.ratio, b.ratio, 1e-12 * a.ratio);
  }
}
