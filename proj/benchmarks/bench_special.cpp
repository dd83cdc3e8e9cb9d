#include <benchmark/benchmark.h>

#include "pwh/hyp2f1.hpp"
#include "pwh/ortho.hpp"
#include "pwh/special.hpp"

namespace {

void BM_LogGamma(benchmark::State& state) {
  pwh::Complex z(0.3, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pwh::log_gamma(z));
}
BENCHMARK(BM_LogGamma)->Arg(1)->Arg(40)->Arg(1000);

// one abscissa per branch: series, Euler, around 1, 1/x
void BM_F21(benchmark::State& state) {
  const double x = state.range(0) / 100.0;
  pwh::HypParams hp{0.7, 0.4, 1.6};
  for (auto _ : state) benchmark::DoNotOptimize(pwh::f21_eval(hp, x));
}
BENCHMARK(BM_F21)->Arg(30)->Arg(-250)->Arg(95)->Arg(400);

void BM_Jacobi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pwh::jacobi_eval(n, 0.3, 0.5, 0.2));
}
BENCHMARK(BM_Jacobi)->Arg(2)->Arg(10)->Arg(40);

void BM_Phi(benchmark::State& state) {
  pwh::Params prm = pwh::Params::make(0.3, 0.5, 0.25);
  pwh::PhiFunction f(prm, pwh::SpectralIndex::make(prm, static_cast<int>(state.range(0))));
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(x));
    x = x < 5.0 ? x * 1.07 : 0.05;
  }
}
BENCHMARK(BM_Phi)->Arg(0)->Arg(5)->Arg(20);

void BM_Psi(benchmark::State& state) {
  pwh::Params prm = pwh::Params::make(0.3, 0.5, 0.25);
  pwh::PsiFunction f(prm, static_cast<double>(state.range(0)));
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(x));
    x = x < 5.0 ? x * 1.07 : 0.05;
  }
}
BENCHMARK(BM_Psi)->Arg(1)->Arg(20);

}  // namespace
