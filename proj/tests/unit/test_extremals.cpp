#include <gtest/gtest.h>

#include <cmath>

#include "pzbench/extremals.hpp"
#include "pzbench/torus.hpp"

using namespace pzbench;
using namespace pzbench::extremals;

TEST(Fejer, Coefficients) {
  const auto k1 = fejer(1);
  EXPECT_EQ(k1.size(), 3u);
  EXPECT_DOUBLE_EQ(k1[-1].real(), 0.5);
  EXPECT_DOUBLE_EQ(k1[0].real(), 1.0);
  EXPECT_DOUBLE_EQ(k1[1].real(), 0.5);
  const auto k9 = fejer(9);
  for (int j = -9; j <= 9; ++j) EXPECT_DOUBLE_EQ(k9[j].real(), 1.0 - std::abs(j) / 10.0);
  EXPECT_THROW(fejer(0), PreconditionError);
}

TEST(Fejer, UnitMassAndPeak) {
  for (std::int64_t n : {1, 4, 64, 1023}) {
    const auto k = fejer(n);
    const auto s = torus::synthesize(k, torus::next_pow2_above(8 * static_cast<std::size_t>(n)));
    EXPECT_NEAR(torus::lp_norm(s, 1.0), 1.0, 1e-8) << n;
    long double sum = 0.0L;
    for (const auto& [f, c] : k) sum += c.real();
    EXPECT_NEAR(static_cast<double>(sum), static_cast<double>(n + 1), 1e-12 * n);
    EXPECT_NEAR(s[0].real(), static_cast<double>(n + 1), 1e-12 * n);
  }
}

TEST(FejerProperty, NonnegativeOnEveryGrid) {
  for (std::int64_t n : {1, 3, 7, 20, 100}) {
    const auto k = fejer(n);
    for (std::size_t m = torus::minimum_grid_size(n); m <= 2048; m *= 2) {
      for (const Complex& v : torus::synthesize(k, m).values()) EXPECT_GE(v.real(), -1e-10);
    }
  }
}

TEST(ValleePoussin, FlatnessAndDefinition) {
  const auto v3 = vallee_poussin(3);
  EXPECT_EQ(v3[5], Complex(1.0));
  EXPECT_EQ(v3[0], Complex(1.0));
  for (int N = 1; N <= 10; ++N) {
    const auto v = vallee_poussin(N);
    const std::int64_t top = std::int64_t{1} << N;
    for (std::int64_t n = -top; n <= top; ++n) ASSERT_EQ(v[n], Complex(1.0)) << N << " " << n;
    EXPECT_NEAR(v[top + 1].real(), 1.0 - std::exp2(-N), 1e-15);
    EXPECT_EQ(v.degree(), 2 * top - 1);
    const auto ref = 2.0 * fejer(2 * top - 1) - fejer(top - 1);
    double gap = 0.0;
    for (const auto& [n, c] : v - ref) gap = std::max(gap, std::abs(c));
    EXPECT_LE(gap, 1e-14);
  }
  EXPECT_THROW(vallee_poussin(0), PreconditionError);
}

TEST(ValleePoussin, L1AtMostThree) {
  for (int N = 1; N <= 12; ++N) {
    const auto v = vallee_poussin(N);
    const double l1 = torus::lp_norm(torus::synthesize(v, std::size_t{8} << (N + 1)), 1.0);
    EXPECT_LE(l1, 3.0) << N;
    EXPECT_GE(l1, 1.0 - 1e-12);
  }
}

TEST(Sharpness, LMatchesIndependentSumAndIncreases) {
  const double r[] = {0.25, 0.5};
  const auto t = sharpness_experiment(2, 8, r);
  ASSERT_EQ(t.rows.size(), 7u);
  double prev = 0.0;
  for (const auto& row : t.rows) {
    const std::int64_t a = std::int64_t{2} << row.N;
    long double l2 = 0.0L;
    for (std::int64_t n = 1; n < a; ++n) {
      const long double c = n <= a / 2 ? 1.0L : 2.0L * (a - n) / a;
      l2 += 2.0L * c * c / n;
    }
    EXPECT_NEAR(row.l, std::sqrt(static_cast<double>(l2)), 1e-12 * row.l);
    EXPECT_GT(row.l, prev);
    prev = row.l;
    EXPECT_EQ(row.grid, std::size_t{8} << (row.N + 1));
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_NEAR(row.ratio[i], row.l / (1.0 + row.phi[i]), 1e-15 * row.l);
    }
  }
  EXPECT_THROW(sharpness_experiment(2, 4, r, 4), GridTooSmall);
}

TEST(Ingham, ParametersAndCoefficients) {
  EXPECT_NO_THROW(validate({0.5, 0.8}));
  EXPECT_THROW(validate({0.5, 0.75}), PreconditionError);
  EXPECT_THROW(validate({0.5, 1.01}), PreconditionError);
  EXPECT_THROW(validate({1.0, 1.0}), PreconditionError);
  const InghamParams p;
  const auto s = ingham_partial_sum(p, 500);
  EXPECT_EQ(s[0], Complex(0.0));
  EXPECT_EQ(s[1], Complex(0.0));
  EXPECT_EQ(s.size(), 499u);
  for (std::int64_t n : {2, 3, 17, 499, 500}) {
    const double ln = std::log(static_cast<double>(n));
    EXPECT_NEAR(std::abs(s[n]), 1.0 / (std::sqrt(static_cast<double>(n)) * std::pow(ln, 0.8)),
                1e-15);
  }
  EXPECT_THROW(ingham_partial_sum(p, 2), PreconditionError);
}

TEST(Ingham, TailsDecreaseOnShortRange) {
  const std::int64_t horizons[] = {1 << 10, 1 << 11, 1 << 12, 1 << 13};
  const auto tails = ingham_tails(InghamParams{}, horizons);
  for (std::size_t i = 1; i < tails.size(); ++i) EXPECT_LT(tails[i].sup, tails[i - 1].sup);
}

TEST(SidonWeight, PartialSumAgainstOracles) {
  const auto small = sidon_weight_divergence(0.8, 1000);
  const auto big = sidon_weight_divergence(0.8, 100000);
  EXPECT_GT(big.partial_sum, small.partial_sum);
  long double oracle = 0.0L;
  for (std::int64_t n = 2; n <= 100000; ++n) {
    oracle += 1.0L / (n * std::pow(std::log(static_cast<long double>(n)), 0.8L));
  }
  EXPECT_NEAR(big.partial_sum, static_cast<double>(oracle), 1e-11);
  const double closed = (std::pow(std::log(1e5), 0.2) - std::pow(std::log(2.0), 0.2)) / 0.2;
  EXPECT_NEAR(big.integral_estimate, closed, 1e-12);
  const auto one = sidon_weight_divergence(1.0, 100000);
  EXPECT_NEAR(one.integral_estimate, std::log(std::log(1e5)) - std::log(std::log(2.0)), 1e-12);
  EXPECT_THROW(sidon_weight_divergence(0.0, 100), PreconditionError);
}
