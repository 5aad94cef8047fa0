#include <benchmark/benchmark.h>

#include "pzbench/realline.hpp"

using namespace pzbench;
using namespace pzbench::realline;

namespace {

void BM_FourierTransformPoint(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  const auto f = raised_cosine_bump(256.0, M, Interval{-8.0, 8.0});
  double xi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier_transform(f, xi));
    xi = xi > 1.0 ? 0.0 : xi + 1e-3;
  }
}
BENCHMARK(BM_FourierTransformPoint)->Arg(1 << 12)->Arg(1 << 16);

void BM_SquareFunction(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  const auto corpus = mean_zero_corpus(1, 5, 256.0, M, Interval{-8.0, 8.0});
  for (auto _ : state) benchmark::DoNotOptimize(square_function_norm(corpus.front()));
}
BENCHMARK(BM_SquareFunction)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_BlockMassInverseAbs(benchmark::State& state) {
  const auto mu = PaleyMeasure::inverse_abs(-20, 20);
  for (auto _ : state) benchmark::DoNotOptimize(paley_sup(mu));
}
BENCHMARK(BM_BlockMassInverseAbs);

}  // namespace
