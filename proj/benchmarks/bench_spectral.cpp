#include <benchmark/benchmark.h>

#include "pwh/identities.hpp"
#include "pwh/mellin_barnes.hpp"
#include "pwh/quadrature.hpp"
#include "pwh/spectral.hpp"

namespace {

const pwh::Params kPoint = pwh::Params::make(0.3, 0.5, 0.25);

void BM_Gram(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pwh::gram_matrix(kPoint, 0, size));
}
BENCHMARK(BM_Gram)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BarnesMain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pwh::barnes_main_integral(0.7, 0.4, 1.6, 2.0));
}
BENCHMARK(BM_BarnesMain)->Unit(benchmark::kMicrosecond);

void BM_Convolution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pwh::convolution_check(kPoint, 0.25, 1.25));
}
BENCHMARK(BM_Convolution)->Unit(benchmark::kMillisecond);

void BM_XiTransform(benchmark::State& state) {
  pwh::SpectralGrid grid{0.05, 40.0};
  for (auto _ : state) benchmark::DoNotOptimize(pwh::xi_transform(kPoint, 0.6, 20, grid));
}
BENCHMARK(BM_XiTransform)->Unit(benchmark::kMicrosecond);

void BM_Parseval(benchmark::State& state) {
  pwh::SpectralGrid grid{0.05, 40.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(pwh::parseval_check(kPoint, pwh::xi_handle(0.6), pwh::xi_handle(0.6), 20, grid));
}
BENCHMARK(BM_Parseval)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_BetaLhs(benchmark::State& state) {
  pwh::BetaIdentityParams bp{kPoint, 0.3, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(pwh::beta_lhs(bp));
}
BENCHMARK(BM_BetaLhs)->Unit(benchmark::kMillisecond);

void BM_Dougall(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pwh::dougall_check(0.2, 1.3, 1.4, 1.5, n));
}
BENCHMARK(BM_Dougall)->Arg(200)->Arg(20000)->Unit(benchmark::kMicrosecond);

}  // namespace
