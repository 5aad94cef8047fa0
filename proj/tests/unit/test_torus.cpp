#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "pzbench/extremals.hpp"
#include "pzbench/multipliers.hpp"
#include "pzbench/torus.hpp"
#include "pzbench/window.hpp"

using namespace pzbench;
using torus::TrigPoly;

TEST(TorusTypes, ZeroCoefficientsAreNotStored) {
  TrigPoly p(1);
  p.set(3, 2.0);
  p.set(5, 0.0);
  EXPECT_EQ(p.size(), 1u);
  p.add(3, -2.0);
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(p.degree(), 0);
}

TEST(TorusTypes, RejectsBadInput) {
  TrigPoly p(2);
  EXPECT_THROW(p.set(torus::Frequency(1), 1.0), PreconditionError);
  EXPECT_THROW(p.set({1, 2}, Complex(NAN, 0.0)), PreconditionError);
  EXPECT_THROW(TrigPoly(0), PreconditionError);
  EXPECT_THROW(torus::GridSignal({3}, std::vector<Complex>(3)), PreconditionError);
  EXPECT_THROW(torus::GridSignal({4}, std::vector<Complex>(5)), PreconditionError);
  EXPECT_THROW(torus::OrliczExponent(-0.5), PreconditionError);
}

TEST(TorusTypes, DegreeTracksSupport) {
  TrigPoly p(2);
  p.set({-7, 2}, 1.0);
  p.set({3, -4}, 1.0);
  EXPECT_EQ(p.degree(0), 7);
  EXPECT_EQ(p.degree(1), 4);
  EXPECT_EQ(p.degree(), 7);
  EXPECT_EQ(p.min_index(0), -7);
  EXPECT_EQ(p.max_index(1), 2);
}

TEST(Synthesize, SingleCharacterIsUnimodular) {
  TrigPoly p(1);
  p.set(3, 1.0);
  const auto s = torus::synthesize(p, 16);
  for (const Complex& v : s.values()) EXPECT_NEAR(std::abs(v), 1.0, 1e-14);
}

TEST(Synthesize, ConstantPolynomial) {
  TrigPoly p(1);
  const Complex c(0.3, -1.2);
  p.set(0, c);
  for (std::size_t m : {2u, 8u, 64u}) {
    const auto s = torus::synthesize(p, m);
    for (const Complex& v : s.values()) EXPECT_EQ(v, c);
  }
}

TEST(Synthesize, RejectsCoarseGrid) {
  TrigPoly p(1);
  p.set(8, 1.0);
  EXPECT_THROW(torus::synthesize(p, 16), GridTooSmall);
  EXPECT_NO_THROW(torus::synthesize(p, 32));
  try {
    torus::synthesize(p, 8);
  } catch (const GridTooSmall& e) {
    EXPECT_EQ(e.required(), 32u);
  }
}

TEST(Synthesize, MatchesDirectEvaluation) {
  std::mt19937_64 rng(11);
  const TrigPoly p = gen::poly_1d(rng, -6, 9);
  const std::size_t M = 32;
  const auto s = torus::synthesize(p, M);
  for (std::size_t j = 0; j < M; ++j) {
    Complex direct{};
    for (const auto& [n, c] : p) {
      direct += c * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(n[0]) *
                                        static_cast<double>(j) / M);
    }
    EXPECT_NEAR(std::abs(s[j] - direct), 0.0, 1e-12);
  }
}

TEST(Analyze, ConstantSignal) {
  torus::GridSignal s({16}, std::vector<Complex>(16, 1.0));
  const TrigPoly p = torus::analyze(s, 1e-14);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_NEAR(std::abs(p[0] - 1.0), 0.0, 1e-15);
}

TEST(Analyze, SingleCharacter) {
  std::vector<Complex> v(32);
  for (std::size_t j = 0; j < 32; ++j) {
    v[j] = std::polar(1.0, 2.0 * std::numbers::pi * 5.0 * static_cast<double>(j) / 32.0);
  }
  const TrigPoly p = torus::analyze(torus::GridSignal({32}, v), 1e-12);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_NEAR(std::abs(p[5] - 1.0), 0.0, 1e-13);
}

TEST(TorusProperty, RoundTripAllDims) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const TrigPoly p1 = gen::poly_1d(rng, -gen::integer(rng, 0, 100), gen::integer(rng, 1, 100));
    const auto g1 = torus::synthesize(p1, 256);
    EXPECT_LE(gen::max_gap(torus::analyze(g1, 1e-13), p1), 1e-10 * p1.coefficient_l2());

    const TrigPoly p2 = gen::poly_2d(rng, gen::integer(rng, 1, 12));
    const auto g2 = torus::synthesize(p2, torus::minimum_grid(p2, 8));
    EXPECT_LE(gen::max_gap(torus::analyze(g2, 1e-13), p2), 1e-10 * p2.coefficient_l2());
  }
  TrigPoly p3(3);
  p3.set({1, -2, 3}, 1.0);
  p3.set({0, 2, -1}, Complex(0, 2.0));
  EXPECT_EQ(torus::analyze(torus::synthesize(p3, 8), 1e-12).size(), 2u);
}

TEST(TorusProperty, Parseval) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 30; ++trial) {
    const TrigPoly p = trial % 2 ? gen::poly_1d(rng, -40, gen::integer(rng, 1, 60))
                                 : gen::poly_2d(rng, gen::integer(rng, 1, 10));
    const auto s = torus::synthesize(p, torus::minimum_grid(p));
    const double l2 = torus::lp_norm(s, 2.0);
    const double c2 = p.coefficient_l2();
    EXPECT_NEAR(l2 * l2, c2 * c2, 1e-10 * c2 * c2);
  }
}

TEST(TorusProperty, EvenPQuadratureStableUnderGridDoubling) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t d = gen::integer(rng, 1, 20);
    const TrigPoly p = gen::poly_1d(rng, -d, d);
    for (int q : {4, 6, 8}) {
      const std::size_t m = torus::next_pow2_above(static_cast<std::size_t>(q * d));
      const double a = torus::lp_norm(torus::synthesize(p, m), q);
      const double b = torus::lp_norm(torus::synthesize(p, 2 * m), q);
      EXPECT_NEAR(a, b, 1e-10 * b) << "p=" << q << " d=" << d;
    }
  }
}

TEST(LpNorm, Examples) {
  TrigPoly chi(1);
  chi.set(7, 1.0);
  for (double p : {1.0, 2.0, 3.5, 8.0, torus::kInfinity}) {
    EXPECT_NEAR(torus::lp_norm(torus::synthesize(chi, 32), p), 1.0, 1e-14);
  }
  EXPECT_NEAR(torus::lp_norm(torus::synthesize(extremals::fejer(4), 64), 1.0), 1.0, 1e-8);
  TrigPoly cosine(1);
  cosine.set(1, 0.5);
  cosine.set(-1, 0.5);
  EXPECT_NEAR(torus::lp_norm(torus::synthesize(cosine, 16), 2.0), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(torus::lp_norm(torus::synthesize(cosine, 16), 0.5), PreconditionError);
}

TEST(Orlicz, Examples) {
  std::mt19937_64 rng(104);
  const TrigPoly p = gen::poly_1d(rng, -10, 10);
  const auto s = torus::synthesize(p, 64);
  EXPECT_NEAR(torus::orlicz_functional(s, torus::OrliczExponent(0.0)), torus::lp_norm(s, 1.0),
              1e-13);
  torus::GridSignal zero({8}, std::vector<Complex>(8));
  EXPECT_EQ(torus::orlicz_functional(zero, torus::OrliczExponent(0.5)), 0.0);

  // |f| == 1: Phi_r = log(2)^r.
  TrigPoly chi(1);
  chi.set(2, 1.0);
  const auto c = torus::synthesize(chi, 16);
  for (double r : {0.25, 0.5, 1.0, 2.0}) {
    EXPECT_NEAR(torus::orlicz_functional(c, torus::OrliczExponent(r)),
                std::pow(std::log(2.0), r), 1e-14);
  }
}

TEST(OrliczProperty, MonotoneInAmplitudeAndInRWhenLarge) {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly p = gen::poly_1d(rng, -8, 8);
    const auto s = torus::synthesize(p, 64);
    std::vector<Complex> bigger(s.values().begin(), s.values().end());
    for (Complex& v : bigger) v *= gen::uniform(rng, 1.0, 2.0);
    const torus::GridSignal t(std::vector<std::size_t>{64}, bigger);
    for (double r : {0.0, 0.5, 1.0}) {
      EXPECT_LE(torus::orlicz_functional(s, torus::OrliczExponent(r)),
                torus::orlicz_functional(t, torus::OrliczExponent(r)) * (1 + 1e-15));
    }
    // log(1+|v|) >= 1 everywhere makes Phi_r nondecreasing in r.
    std::vector<Complex> lifted(64);
    for (std::size_t j = 0; j < 64; ++j) {
      lifted[j] = std::polar(std::numbers::e - 1.0 + std::abs(s[j]), std::arg(s[j]));
    }
    const torus::GridSignal u(std::vector<std::size_t>{64}, lifted);
    double prev = 0.0;
    for (double r : {0.0, 0.25, 0.5, 1.0, 2.0}) {
      const double v = torus::orlicz_functional(u, torus::OrliczExponent(r));
      EXPECT_GE(v, prev * (1 - 1e-15));
      prev = v;
    }
  }
}

TEST(WeightedL2, Examples) {
  std::mt19937_64 rng(106);
  const TrigPoly p = gen::poly_1d(rng, -20, 20);
  const auto one = [](std::int64_t) { return 1.0; };
  EXPECT_NEAR(torus::weighted_l2(p, one), torus::lp_norm(torus::synthesize(p, 64), 2.0), 1e-13);

  // V_{2^10} with 1/sqrt|n| dominates the one-sided harmonic sum to 2^10.
  const auto v = extremals::vallee_poussin(10);
  const auto m = multipliers::MultiplierSeq::inverse_sqrt(1 << 12);
  long double h = 0.0L;
  for (int n = 1; n <= 1024; ++n) h += 1.0L / n;
  EXPECT_GE(torus::weighted_l2(v, m), std::sqrt(static_cast<double>(h)));
  EXPECT_NEAR(std::sqrt(static_cast<double>(h)), 2.7402, 1e-4);
}

TEST(WeightedL2Property, BoundedBySupTimesL2) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly p = gen::poly_1d(rng, -30, 30);
    std::map<std::int64_t, Complex> table;
    for (std::int64_t n = -30; n <= 30; ++n) table[n] = gen::coefficient(rng);
    const auto m = multipliers::MultiplierSeq::table(table, 64);
    EXPECT_LE(torus::weighted_l2(p, m),
              m.sup_abs() * torus::lp_norm(torus::synthesize(p, 128), 2.0) * (1 + 1e-12));
  }
}

TEST(SquareFunction, Examples) {
  TrigPoly p(1);
  p.set(2, 1.0);
  // Candidate blocks are k in {0, 1}; eta vanishes at 1, so only k = 0 survives.
  EXPECT_EQ(torus::periodic_blocks(p), (std::vector<int>{0}));
  const double norm = torus::periodic_square_function_norm(p);
  EXPECT_LE(norm, std::sqrt(2.0) + 1e-12);
  EXPECT_NEAR(norm, 1.0, 1e-12);
  EXPECT_EQ(torus::periodic_square_function_norm(TrigPoly(1)), 0.0);
}

TEST(Window, PartitionBoundsOnLogGrid) {
  for (int i = 0; i <= 2000; ++i) {
    const double xi = std::exp2(-4.0 + 12.0 * i / 2000.0);
    const double s = dyadic_window_partition(xi, -10, 12);
    EXPECT_GE(s, 1.0 - 1e-12);
    EXPECT_LE(s, 2.0 + 1e-12);
    EXPECT_NEAR(dyadic_window(xi), dyadic_window(-xi), 0.0);
    EXPECT_GE(dyadic_window(xi), 0.0);
    EXPECT_LE(dyadic_window(xi), 1.0);
  }
  EXPECT_EQ(dyadic_window(1.0), 0.0);
  EXPECT_EQ(dyadic_window(1.5), 1.0);
  EXPECT_EQ(dyadic_window(2.0), 1.0);
  EXPECT_EQ(dyadic_window(3.0), 0.0);
  EXPECT_NEAR(dyadic_window(1.25), 0.5, 1e-15);
  EXPECT_NEAR(dyadic_window(2.5), 0.5, 1e-15);
}
