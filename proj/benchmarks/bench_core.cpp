#include <benchmark/benchmark.h>

#include "ccc/asymptotics.hpp"
#include "ccc/exact.hpp"
#include "ccc/ks.hpp"
#include "ccc/rng.hpp"
#include "ccc/simulate.hpp"

using namespace ccc;

static void BM_PmfMarkovFloat(benchmark::State& state) {
  const ModelParams params{static_cast<int>(state.range(0)), Scalar::floating(0.1L)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmf_markov(params, 5000));
  }
}
BENCHMARK(BM_PmfMarkovFloat)->Arg(10)->Arg(100);

static void BM_PmfSeriesExact(benchmark::State& state) {
  const ModelParams params{4, Scalar::exact(Rational(1, 2))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmf_series(params, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_PmfSeriesExact)->Arg(100)->Arg(200);

static void BM_SimulateCoupled(benchmark::State& state) {
  const ModelParams params{static_cast<int>(state.range(0)), Scalar::floating(0.01L)};
  std::uint64_t stream = 0;
  for (auto _ : state) {
    RngStream rng(7, stream++);
    benchmark::DoNotOptimize(simulate_coupled(params, rng));
  }
}
BENCHMARK(BM_SimulateCoupled)->Arg(100)->Arg(1000);

static void BM_TauLaplace(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_c_laplace(1.0, 1.5));
  }
}
BENCHMARK(BM_TauLaplace);

static void BM_MgfEval(benchmark::State& state) {
  const ModelParams params{static_cast<int>(state.range(0)), Scalar::floating(0.25L)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mgf_eval(params, -1.0));
  }
}
BENCHMARK(BM_MgfEval)->Arg(40)->Arg(400);

static void BM_KsOneSample(benchmark::State& state) {
  std::vector<double> xs(static_cast<size_t>(state.range(0)));
  RngStream rng(3, 0);
  for (auto& x : xs) x = gumbel_quantile(rng.next_open01());
  std::sort(xs.begin(), xs.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(ks_one_sample(xs, gumbel_cdf, 0.05));
  }
}
BENCHMARK(BM_KsOneSample)->Arg(10000)->Arg(100000);

static void BM_MeanClosedExact(benchmark::State& state) {
  const ModelParams params{static_cast<int>(state.range(0)),
                           Scalar::exact(Rational(1, 3))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mean_closed(params));
  }
}
BENCHMARK(BM_MeanClosedExact)->Arg(16)->Arg(64);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
