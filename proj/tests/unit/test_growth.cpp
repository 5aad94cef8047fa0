#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "pzbench/growth.hpp"

using namespace pzbench;
using namespace pzbench::growth;
using torus::TrigPoly;

namespace {
spectra::FrequencySet set_of(std::initializer_list<std::int64_t> v) {
  spectra::FrequencySet s;
  for (auto n : v) s.insert(n);
  return s;
}
const int kPGrid[] = {4, 8, 16, 32, 64};
}  // namespace

TEST(Ensembles, DeterministicAndUnimodular) {
  const auto s = set_of({1, 2, 4, 8, 16});
  for (auto kind : {EnsembleKind::random_signs, EnsembleKind::steinhaus, EnsembleKind::flat,
                    EnsembleKind::phase_ascent}) {
    const auto a = draw(s, kind, 9, 3);
    EXPECT_EQ(a, draw(s, kind, 9, 3));
    for (const auto& [n, c] : a) EXPECT_NEAR(std::abs(c), 1.0, 1e-15);
  }
  EXPECT_NE(draw(s, EnsembleKind::steinhaus, 9, 3), draw(s, EnsembleKind::steinhaus, 9, 4));
  for (const auto& [n, c] : draw(s, EnsembleKind::random_signs, 1, 0)) {
    EXPECT_TRUE(c == Complex(1.0) || c == Complex(-1.0));
  }
  EXPECT_EQ(ensemble_kind_from_string(to_string(EnsembleKind::phase_ascent)),
            EnsembleKind::phase_ascent);
  EXPECT_THROW(ensemble_kind_from_string("gaussian"), PreconditionError);
}

TEST(LambdaP, Examples) {
  for (double p : {4.0, 8.0, 64.0}) {
    EXPECT_NEAR(lambda_p_ratio(set_of({7}), p, {EnsembleKind::steinhaus, 1, 4}).ratio, 1.0,
                1e-14);
  }
  const auto two = lambda_p_ratio(set_of({0, 5}), 4, {EnsembleKind::flat, 0, 1});
  EXPECT_NEAR(two.ratio, std::pow(6.0, 0.25) / std::sqrt(2.0), 1e-14);
  EXPECT_THROW(lambda_p_ratio(set_of({0, 5}), 3, {}), PreconditionError);
  EXPECT_THROW(checked_even_p(66), PreconditionError);
  EXPECT_EQ(checked_even_p(64), 64);
}

TEST(LambdaP, LacunaryAtP64WithinSeededRange) {
  spectra::FrequencySet s;
  for (int j = 0; j < 8; ++j) s.insert(std::int64_t{1} << j);
  const double r = lambda_p_ratio(s, 64, {EnsembleKind::random_signs, 1, 16}).ratio;
  EXPECT_GE(r, 2.2);
  EXPECT_LE(r, 4.5);
  // The flat polynomial attains sqrt(#spectrum) at 0, which caps every ratio.
  EXPECT_LE(r, std::sqrt(8.0));
}

TEST(LambdaProperty, EvenPQuadratureMatchesFineGrid) {
  std::mt19937_64 rng(501);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly f = gen::poly_1d(rng, -gen::integer(rng, 0, 12), gen::integer(rng, 1, 12));
    for (int p : {4, 8, 16}) {
      const auto g = exact_grid(f, p);
      const double coarse = torus::lp_norm(torus::synthesize(f, g), p);
      const double fine = torus::lp_norm(torus::synthesize(f, 4 * g[0]), p);
      EXPECT_NEAR(coarse, fine, 1e-10 * fine);
    }
  }
}

TEST(LambdaProperty, ParsevalAtTwoAndScaleInvariance) {
  std::mt19937_64 rng(502);
  const int ps[] = {2, 4, 10};
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly f = gen::poly_1d(rng, -20, 20, 0.3);
    const auto a = lp_ratios(f, ps);
    EXPECT_NEAR(a[0], 1.0, 1e-12);
    EXPECT_GE(a[1], 1.0 - 1e-12);
    const auto b = lp_ratios(Complex(gen::uniform(rng, 0.1, 20.0), 0.0) * gen::unimodular(rng) * f, ps);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(a[i], b[i], 1e-12 * a[i]);
  }
  for (auto kind : {EnsembleKind::random_signs, EnsembleKind::steinhaus}) {
    const auto l = lambda_p_ratio(set_of({1, 3, 9, 27}), 2, {kind, 5, 4});
    EXPECT_NEAR(l.ratio, 1.0, 1e-12);
  }
}

TEST(Growth, SingletonIsDegenerate) {
  const auto r = growth_exponent(set_of({3}), kPGrid, {EnsembleKind::random_signs, 1, 2});
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.exponent, 0.0);
  const spectra::FrequencySet one[] = {set_of({2}), set_of({5})};
  const auto t = tensor_growth(one, kPGrid, {EnsembleKind::flat, 0, 1});
  EXPECT_EQ(t.exponent, 0.0);
  EXPECT_TRUE(t.degenerate);
  const int short_grid[] = {4, 8};
  EXPECT_THROW(growth_exponent(set_of({1, 2}), short_grid, {}), PreconditionError);
}

TEST(Growth, ExponentFitsReportedRatios) {
  spectra::FrequencySet s;
  for (int j = 0; j < 8; ++j) s.insert(std::int64_t{1} << j);
  const auto r = growth_exponent(s, kPGrid, {EnsembleKind::random_signs, 3, 8});
  ASSERT_EQ(r.ratios.size(), 5u);
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    mx += std::log(kPGrid[i]) / 5;
    my += std::log(r.ratios[i]) / 5;
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    sxy += (std::log(kPGrid[i]) - mx) * (std::log(r.ratios[i]) - my);
    sxx += (std::log(kPGrid[i]) - mx) * (std::log(kPGrid[i]) - mx);
  }
  EXPECT_NEAR(r.exponent, sxy / sxx, 1e-12);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_GE(r.ratios[i], r.ratios[i - 1] - 1e-12);
}

TEST(EMatrixAlgebra, RankOneIsOuterProduct) {
  const Complex a[] = {{1.0, 0.5}, {-2.0, 1.0}};
  const Complex b[] = {{0.5, 0.0}, {0.0, -1.5}};
  TrigPoly f(2);
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) f.set({m, 3 * n + 1}, a[m] * b[n]);
  }
  const auto e = e_matrix(f);
  const double na = std::norm(a[0]) + std::norm(a[1]);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      EXPECT_NEAR(std::abs(e.entries(i, j) - na * b[i] * std::conj(b[j])), 0.0, 1e-14);
    }
  }
  const auto cs = cauchy_schwarz_check(e, f);
  EXPECT_NEAR(cs.lhs, cs.rhs, 1e-12 * cs.rhs);
}

TEST(EMatrixAlgebra, SingleCoefficientAndZero) {
  TrigPoly f(2);
  f.set({4, -2}, Complex(0.0, 3.0));
  const auto e = e_matrix(f);
  ASSERT_EQ(e.entries.rows(), 1);
  EXPECT_DOUBLE_EQ(e.entries(0, 0).real(), 9.0);
  EXPECT_EQ(e.index, (std::vector<std::int64_t>{-2}));
  const auto z = cauchy_schwarz_check(e_matrix(TrigPoly(2)), TrigPoly(2));
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  EXPECT_THROW(e_matrix(TrigPoly(1)), PreconditionError);
}

TEST(EMatrixProperty, TraceHermitianCauchySchwarzSplit) {
  std::mt19937_64 rng(503);
  for (int trial = 0; trial < 40; ++trial) {
    const TrigPoly f = gen::poly_2d(rng, gen::integer(rng, 1, 6));
    for (std::size_t axis : {0u, 1u}) {
      const auto e = e_matrix(f, axis);
      const double l2 = f.coefficient_l2();
      EXPECT_NEAR(e.trace(), l2 * l2, 1e-12 * l2 * l2);
      EXPECT_LE((e.entries - e.entries.adjoint()).norm(), 1e-14 * e.entries.norm());
      const auto cs = cauchy_schwarz_check(e, f);
      EXPECT_LT(cs.lhs, cs.rhs);
      std::vector<std::int64_t> order(e.index.rbegin(), e.index.rend());
      std::shuffle(order.begin(), order.end(), rng);
      const auto split = offdiagonal_split(e, order);
      EXPECT_EQ(split.diag + split.upper + split.lower, e.entries);
      EXPECT_EQ(split.upper, split.lower.adjoint());
      EXPECT_NEAR(split.diag.trace().real(), l2 * l2, 1e-12 * l2 * l2);
    }
  }
}

TEST(EMatrixAlgebra, SplitRejectsBadOrder) {
  TrigPoly f(2);
  f.set({0, 1}, 1.0);
  f.set({0, 2}, 1.0);
  const auto e = e_matrix(f);
  const std::int64_t dup[] = {1, 1};
  const std::int64_t wrong[] = {1, 3};
  EXPECT_THROW(offdiagonal_split(e, dup), PreconditionError);
  EXPECT_THROW(offdiagonal_split(e, wrong), PreconditionError);
}

TEST(Sidon, Examples) {
  const auto one = multipliers::MultiplierSeq::constant(1.0, 64);
  EXPECT_NEAR(sidon_lower_bound(one, set_of({5}), {EnsembleKind::steinhaus, 1, 4}).value, 1.0,
              1e-14);
  // Two frequencies: ||a + b e||_inf = |a| + |b|, so every ratio is 1.
  TrigPoly f(1);
  f.set(0, 1.0);
  f.set(9, 1.0);
  EXPECT_DOUBLE_EQ(f.coefficient_l1(), 2.0);
  EXPECT_NEAR(torus::lp_norm(torus::synthesize(f, 256), torus::kInfinity), 2.0, 1e-15);
  EXPECT_NEAR(sidon_ratio(one, f), 1.0, 1e-14);
  const auto pair = sidon_lower_bound(one, set_of({0, 9}), {EnsembleKind::random_signs, 2, 4});
  EXPECT_NEAR(pair.value, 1.0, 1e-12);
}

TEST(Sidon, BoundIsAtLeastEveryTrial) {
  const auto m = multipliers::MultiplierSeq::inverse_sqrt(256);
  spectra::FrequencySet s;
  for (std::int64_t n = 2; n <= 200; n += 7) s.insert(n);
  const Ensemble ens{EnsembleKind::steinhaus, 17, 6};
  const auto bound = sidon_lower_bound(m, s, ens);
  for (std::size_t t = 0; t < ens.trials; ++t) {
    TrigPoly f(1);
    for (const auto& [n, u] : draw(s, ens.kind, ens.seed, t)) f.set(n, std::abs(m(n[0])) * u);
    EXPECT_LE(sidon_ratio(m, f), bound.value * (1 + 1e-14));
  }
}

TEST(PhaseAscent, NeverWorseThanStart) {
  std::mt19937_64 rng(504);
  for (int trial = 0; trial < 10; ++trial) {
    spectra::FrequencySet s;
    for (int i = 0; i < 6; ++i) s.insert(gen::integer(rng, -15, 15));
    const TrigPoly start = draw(s, EnsembleKind::steinhaus, 3, static_cast<std::size_t>(trial));
    const std::size_t grid[] = {128};
    auto target = [](std::span<const Complex> v) {
      double acc = 0;
      for (const Complex& z : v) acc += std::pow(std::norm(z), 2);
      return acc;
    };
    const auto s0 = torus::synthesize(start, grid);
    const auto out = phase_ascent(start, grid, target);
    const auto s1 = torus::synthesize(out, grid);
    EXPECT_GE(target(s1.values()), target(s0.values()));
    for (const auto& [n, c] : out) EXPECT_NEAR(std::abs(c), std::abs(start[n]), 1e-14);
  }
}
