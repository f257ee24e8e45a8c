#include <benchmark/benchmark.h>

#include "ffpair/integrator.hpp"
#include "ffpair/recurrence.hpp"
#include "ffpair/verification.hpp"
#include "ffpair/wavefunction.hpp"

using namespace ffpair;

static void BM_ExactSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t = truncation_parameters(n);
  const auto z = t.zeta();
  for (auto _ : state) {
    auto s = generate_series(t.alpha, t.beta, z, static_cast<std::size_t>(n + 3));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ExactSeries)->Arg(1)->Arg(10)->Arg(50);

static void BM_HResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_residual(n));
}
BENCHMARK(BM_HResidual)->Arg(1)->Arg(10)->Arg(50);

static void BM_Integrate(benchmark::State& state) {
  const auto mode = quantized_mode_parameters(1, 1.0, 1.0);
  IntegratorConfig cfg;
  cfg.relative_tolerance = std::pow(10.0, -static_cast<double>(state.range(0)));
  cfg.absolute_tolerance = cfg.relative_tolerance * 1e-2;
  const OdeState initial{Complex(1.0), Complex(0.0)};
  for (auto _ : state) benchmark::DoNotOptimize(integrate_x_ode(mode, cfg, initial));
}
BENCHMARK(BM_Integrate)->Arg(6)->Arg(10);

static void BM_Spectrum(benchmark::State& state) {
  const auto units = UnitSystem::natural();
  const auto pair = PairParameters::from_compton(1.0, 1.0, 1.0);
  for (auto _ : state)
    for (int n = 1; n <= 100; ++n) benchmark::DoNotOptimize(quantized_spectrum(n, pair, units));
}
BENCHMARK(BM_Spectrum);

static void BM_VerifyMode(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_mode(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyMode)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
