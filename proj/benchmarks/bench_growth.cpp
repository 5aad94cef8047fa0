#include <benchmark/benchmark.h>

#include "pzbench/growth.hpp"
#include "pzbench/spectra.hpp"

using namespace pzbench;

namespace {

void BM_SumsetBonami(benchmark::State& state) {
  const auto base = spectra::geometric_lacunary(2, 16);
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectra::sumset_bonami(base, order, 4096));
}
BENCHMARK(BM_SumsetBonami)->DenseRange(1, 3);

void BM_GrowthExponent(benchmark::State& state) {
  const auto set = spectra::FrequencySet::from_1d(spectra::geometric_lacunary(2, 8).terms());
  const int ps[] = {4, 8, 16, 32, 64};
  const growth::Ensemble ens{growth::EnsembleKind::random_signs, 1,
                             static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(growth::growth_exponent(set, ps, ens));
}
BENCHMARK(BM_GrowthExponent)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PhaseAscent(benchmark::State& state) {
  const auto set = spectra::FrequencySet::from_1d(spectra::geometric_lacunary(2, 8).terms());
  const auto start = growth::draw(set, growth::EnsembleKind::flat, 0, 0);
  const std::size_t grid[] = {static_cast<std::size_t>(state.range(0))};
  auto target = [](std::span<const Complex> v) {
    double acc = 0.0;
    for (const Complex& z : v) acc += std::norm(z) * std::norm(z);
    return acc;
  };
  for (auto _ : state) benchmark::DoNotOptimize(growth::phase_ascent(start, grid, target));
}
BENCHMARK(BM_PhaseAscent)->Arg(1 << 10)->Arg(1 << 13)->Unit(benchmark::kMillisecond);

void BM_EMatrix(benchmark::State& state) {
  const auto d = state.range(0);
  torus::TrigPoly f(2);
  for (std::int64_t a = -d; a <= d; ++a) {
    for (std::int64_t b = -d; b <= d; ++b) f.set({a, b}, Complex(1.0 + a, b));
  }
  for (auto _ : state) {
    const auto e = growth::e_matrix(f);
    benchmark::DoNotOptimize(growth::cauchy_schwarz_check(e, f));
  }
}
BENCHMARK(BM_EMatrix)->Arg(8)->Arg(32);

}  // namespace
