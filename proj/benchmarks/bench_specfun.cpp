#include <benchmark/benchmark.h>

#include "specfun/balls.hpp"
#include "specfun/elliptic.hpp"
#include "specfun/gamma.hpp"
#include "specfun/hyper.hpp"
#include "specfun/kernel.hpp"
#include "specfun/modular.hpp"
#include "specfun/verify.hpp"

using namespace specfun;

namespace {

void BM_Gamma(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::gamma(x));
    x = x < 150.0 ? x + 1.7 : 0.3;
  }
}
BENCHMARK(BM_Gamma);

void BM_Digamma(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(digamma(x));
    x = x < 150.0 ? x + 1.7 : 0.3;
  }
}
BENCHMARK(BM_Digamma);

void BM_Theta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta(0.5));
}
BENCHMARK(BM_Theta);

void BM_DeTempleRange(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(detemple_range(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DeTempleRange)->Arg(10000);

void BM_CompensatedSum(benchmark::State& state) {
  std::vector<double> v(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (i % 2 ? -1.0 : 1.0) / static_cast<double>(i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(compensated_sum(v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CompensatedSum)->Arg(1000)->Arg(100000);

// One argument per evaluation regime: series, zero-balanced near one,
// reflection, and ODE continuation.
void BM_F21(benchmark::State& state) {
  static const std::pair<HyperParams, double> cases[] = {
      {{0.5, 0.5, 1.0}, 0.5},
      {{0.5, 0.5, 1.0}, 0.999999},
      {{1.5, 2.5, 2.0}, 0.95},
      {{0.5, -0.5, 1.0}, 0.95},
  };
  const auto& [p, x] = cases[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(f21(p, x));
  state.SetLabel(to_string(f21(p, x).method));
}
BENCHMARK(BM_F21)->DenseRange(0, 3);

void BM_EllipK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ellip_k(0.9));
}
BENCHMARK(BM_EllipK);

void BM_KaGeneralized(benchmark::State& state) {
  const SignatureParam s(1.0 / 3);
  for (auto _ : state) benchmark::DoNotOptimize(k_a(s, 0.9));
}
BENCHMARK(BM_KaGeneralized);

void BM_MuA(benchmark::State& state) {
  const SignatureParam s(0.25);
  for (auto _ : state) benchmark::DoNotOptimize(mu_a(s, 0.3));
}
BENCHMARK(BM_MuA);

void BM_PhiKA(benchmark::State& state) {
  const SignatureParam s(0.25);
  for (auto _ : state) benchmark::DoNotOptimize(phi_k_a(s, 0.2, 0.5));
}
BENCHMARK(BM_PhiKA);

void BM_ModularIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(identity_residual("classical_deg9_chain", 0.6));
}
BENCHMARK(BM_ModularIdentity);

void BM_RunSuite(benchmark::State& state) {
  const auto suite = static_cast<Suite>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite));
  state.SetLabel(to_string(suite));
}
BENCHMARK(BM_RunSuite)
    ->Arg(static_cast<int>(Suite::gamma))
    ->Arg(static_cast<int>(Suite::elliptic))
    ->Arg(static_cast<int>(Suite::all))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
