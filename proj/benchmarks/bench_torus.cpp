#include <benchmark/benchmark.h>

#include <random>

#include "pzbench/extremals.hpp"
#include "pzbench/torus.hpp"
#include "pzbench/zygmund.hpp"

using namespace pzbench;

namespace {

torus::TrigPoly dense(std::int64_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  torus::TrigPoly p(1);
  for (std::int64_t n = -degree; n <= degree; ++n) p.set(n, Complex(u(rng), u(rng)));
  return p;
}

void BM_Synthesize1D(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  const auto p = dense(static_cast<std::int64_t>(M / 4), 1);
  for (auto _ : state) benchmark::DoNotOptimize(torus::synthesize(p, M));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(M));
}
BENCHMARK(BM_Synthesize1D)->RangeMultiplier(8)->Range(1 << 8, 1 << 20);

void BM_Synthesize2D(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  torus::TrigPoly p(2);
  for (std::int64_t a = -8; a <= 8; ++a) {
    for (std::int64_t b = -8; b <= 8; ++b) p.set({a, b}, Complex(1.0 / (1 + a * a + b * b)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(torus::synthesize(p, M));
}
BENCHMARK(BM_Synthesize2D)->Arg(64)->Arg(256)->Arg(1024);

void BM_LpNorm(benchmark::State& state) {
  const auto s = torus::synthesize(dense(1024, 2), 1 << 14);
  const double p = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torus::lp_norm(s, p));
}
BENCHMARK(BM_LpNorm)->Arg(1)->Arg(2)->Arg(7);

void BM_Orlicz(benchmark::State& state) {
  const auto s = torus::synthesize(dense(1024, 3), 1 << 14);
  for (auto _ : state) {
    benchmark::DoNotOptimize(torus::orlicz_functional(s, torus::OrliczExponent(0.5)));
  }
}
BENCHMARK(BM_Orlicz);

void BM_ValleePoussinSharpnessRow(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const double r[] = {0.25, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(extremals::sharpness_experiment(N, N, r));
}
BENCHMARK(BM_ValleePoussinSharpnessRow)->DenseRange(8, 14, 3)->Unit(benchmark::kMillisecond);

void BM_DyadicMaxSelect(benchmark::State& state) {
  torus::TrigPoly p(1);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::int64_t n = 0; n < state.range(0); ++n) p.set(n, Complex(u(rng), u(rng)));
  for (auto _ : state) {
    const auto sel = zygmund::dyadic_max_select(p);
    benchmark::DoNotOptimize(zygmund::even_odd_split(sel));
  }
}
BENCHMARK(BM_DyadicMaxSelect)->Range(1 << 8, 1 << 18);

}  // namespace
