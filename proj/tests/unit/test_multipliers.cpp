#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "pzbench/multipliers.hpp"

using namespace pzbench;
using namespace pzbench::multipliers;
using torus::TrigPoly;

namespace {
spectra::FrequencySet powers_of_two(int count) {
  spectra::FrequencySet s;
  for (int k = 0; k < count; ++k) s.insert(std::int64_t{1} << k);
  return s;
}
}  // namespace

TEST(MultiplierSeq, Forms) {
  const auto inv = MultiplierSeq::inverse_sqrt(100);
  EXPECT_EQ(inv(0), Complex(0.0));
  EXPECT_DOUBLE_EQ(inv(4).real(), 0.5);
  EXPECT_DOUBLE_EQ(inv(-9).real(), 1.0 / 3.0);
  const auto one_sided = MultiplierSeq::inverse_sqrt(100, Side::nonnegative);
  EXPECT_EQ(one_sided(-4), Complex(0.0));
  EXPECT_DOUBLE_EQ(MultiplierSeq::constant(Complex(3, 4), 10).sup_abs(), 5.0);
  EXPECT_THROW(MultiplierSeq::constant(1.0, 0), PreconditionError);
  EXPECT_THROW(MultiplierSeq::table({{1, Complex(INFINITY, 0)}}, 4), PreconditionError);
}

TEST(PaleyBlocks, IndicatorOfPowersOfTwo) {
  const auto m = MultiplierSeq::indicator(powers_of_two(21), 1 << 21);
  const auto half = paley_block_sums(m, 19, BlockConvention::half_open);
  EXPECT_EQ(half.sup, 1.0);
  EXPECT_EQ(half.verdict, PaleyVerdict::bounded_up_to_horizon);
  // The inclusive blocks [2^k, 2^{k+1}] each hold two powers of two.
  EXPECT_EQ(paley_block_sums(m, 19).sup, 2.0);
}

TEST(PaleyBlocks, ConstantOneDiverges) {
  const auto m = MultiplierSeq::constant(1.0, 1 << 21);
  const auto r = paley_block_sums(m, 20);
  EXPECT_EQ(r.verdict, PaleyVerdict::diverging);
  EXPECT_GE(r.tail_growth, 4.0);
  for (int k = 0; k <= 20; ++k) {
    EXPECT_EQ(r.block_sums[static_cast<std::size_t>(k)], 2.0 * ((1 << k) + 1));
  }
}

TEST(PaleyBlocks, InverseSqrtMatchesHarmonicSums) {
  const auto m = MultiplierSeq::inverse_sqrt(1 << 21, Side::nonnegative);
  const auto r = paley_block_sums(m, 20);
  EXPECT_EQ(r.verdict, PaleyVerdict::bounded_up_to_horizon);
  EXPECT_DOUBLE_EQ(r.block_sums[0], 1.5);
  EXPECT_DOUBLE_EQ(r.sup, 1.5);
  for (int k = 0; k <= 20; ++k) {
    long double h = 0.0L;
    for (std::int64_t n = std::int64_t{1} << k; n <= (std::int64_t{2} << k); ++n) h += 1.0L / n;
    EXPECT_NEAR(r.block_sums[static_cast<std::size_t>(k)], static_cast<double>(h), 1e-12);
  }
  EXPECT_EQ(std::floor(r.block_sums[2] * 1e6), 884523.0);
}

TEST(PaleyBlocks, HorizonGuard) {
  EXPECT_EQ(max_block_for_horizon(1), -1);
  EXPECT_EQ(max_block_for_horizon(2), 0);
  EXPECT_EQ(max_block_for_horizon(7), 1);
  EXPECT_EQ(max_block_for_horizon(8), 2);
  EXPECT_THROW(paley_block_sums(MultiplierSeq::constant(1.0, 7), 2), PreconditionError);
}

TEST(PaleyProperty, AdditiveOverDisjointSupports) {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<std::int64_t, Complex> a, b, ab;
    for (std::int64_t n = -256; n <= 256; ++n) {
      const double u = gen::uniform(rng, 0.0, 1.0);
      if (u < 0.3) a[n] = ab[n] = gen::coefficient(rng);
      else if (u < 0.6) b[n] = ab[n] = gen::coefficient(rng);
    }
    const auto ra = paley_block_sums(MultiplierSeq::table(a, 256), 7);
    const auto rb = paley_block_sums(MultiplierSeq::table(b, 256), 7);
    const auto rab = paley_block_sums(MultiplierSeq::table(ab, 256), 7);
    for (std::size_t k = 0; k < rab.block_sums.size(); ++k) {
      EXPECT_NEAR(rab.block_sums[k], ra.block_sums[k] + rb.block_sums[k],
                  1e-12 * (1 + rab.block_sums[k]));
    }
  }
}

TEST(PaleyProperty, IndicatorSupEqualsBlockCountSup) {
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 20; ++trial) {
    spectra::FrequencySet s;
    const auto n = gen::integer(rng, 1, 40);
    for (std::int64_t i = 0; i < n; ++i) s.insert(gen::integer(rng, -1000, 1000));
    const auto m = MultiplierSeq::indicator(s, 2048);
    const auto r = paley_block_sums(m, 9, BlockConvention::half_open);
    EXPECT_EQ(r.sup, static_cast<double>(spectra::block_counts(s, 9).sup));
  }
}

TEST(Apply, Examples) {
  std::mt19937_64 rng(303);
  const TrigPoly p = gen::poly_1d(rng, -10, 10);
  EXPECT_EQ(apply(MultiplierSeq::constant(1.0, 16), p), p);

  spectra::FrequencySet lam;
  for (std::int64_t n : {-3, 1, 4, 9}) lam.insert(n);
  const TrigPoly q = apply(MultiplierSeq::indicator(lam, 16), p);
  for (const auto& [n, c] : q) EXPECT_TRUE(lam.contains(n[0]));
  for (std::int64_t n : {-3, 1, 4, 9}) EXPECT_EQ(q[n], p[n]);

  TrigPoly e4(1);
  e4.set(4, 1.0);
  EXPECT_DOUBLE_EQ(apply(MultiplierSeq::inverse_sqrt(8), e4)[4].real(), 0.5);
  EXPECT_THROW(apply(MultiplierSeq::inverse_sqrt(8), gen::poly_1d(rng, 0, 9)),
               PreconditionError);
}

TEST(ApplyProperty, LinearAndCommutesWithRestriction) {
  std::mt19937_64 rng(304);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<std::int64_t, Complex> t;
    for (std::int64_t n = -20; n <= 20; ++n) t[n] = gen::coefficient(rng);
    const auto m = MultiplierSeq::table(t, 32);
    const TrigPoly f = gen::poly_1d(rng, -20, 20);
    const TrigPoly g = gen::poly_1d(rng, -20, 20);
    const Complex a = gen::coefficient(rng);
    EXPECT_LE(gen::max_gap(apply(m, a * f + g), a * apply(m, f) + apply(m, g)), 1e-14);

    spectra::FrequencySet lam;
    for (std::int64_t n = -20; n <= 20; n += 3) lam.insert(n);
    const auto chi = MultiplierSeq::indicator(lam, 32);
    EXPECT_LE(gen::max_gap(apply(chi, apply(m, f)), apply(m, apply(chi, f))), 0.0);
  }
}

TEST(H1Paley, CharactersOnLacunaryIndicator) {
  const auto m = MultiplierSeq::indicator(powers_of_two(12), 1 << 12);
  double lo = INFINITY, hi = 0.0;
  for (int j = 1; j <= 10; ++j) {
    TrigPoly e(1);
    e.set(std::int64_t{1} << j, 1.0);
    const auto r = h1_paley_ratio(m, e);
    EXPECT_NEAR(r.ratio, 1.0 / torus::periodic_square_function_norm(e), 1e-12);
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  EXPECT_LE(hi / lo, std::sqrt(2.0));
  std::mt19937_64 rng(305);
  EXPECT_EQ(h1_paley_ratio(MultiplierSeq::constant(0.0, 64), gen::poly_1d(rng, -20, 20)).ratio,
            0.0);
}
