#include "casimir/casimir2d.hpp"
#include "casimir/casimir4d.hpp"
#include "casimir/special_functions.hpp"

#include <benchmark/benchmark.h>

using namespace casimir;

namespace {

CavityConfig lorentz_pair(double w1, double w2, double T = 0.0) {
  return {MirrorModel::lorentzian(w1), MirrorModel::lorentzian(w2), 1.0, T};
}

void BM_Polylog(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) benchmark::DoNotOptimize(polylog({x, 3}));
}
BENCHMARK(BM_Polylog);

void BM_Force2dImagAxis(benchmark::State& state) {
  const auto cfg = lorentz_pair(static_cast<double>(state.range(0)), static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(force_imag_axis(cfg).value);
}
BENCHMARK(BM_Force2dImagAxis)->Arg(1)->Arg(10)->Arg(100);

void BM_Force2dRoundtrip(benchmark::State& state) {
  const auto cfg = lorentz_pair(1.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(force_roundtrip_time(cfg).value);
}
BENCHMARK(BM_Force2dRoundtrip)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Force2dThermal(benchmark::State& state) {
  const auto cfg = lorentz_pair(1.0, 1.0, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(force_roundtrip_time(cfg).value);
}
BENCHMARK(BM_Force2dThermal)->Unit(benchmark::kMillisecond);

void BM_Pressure4d(benchmark::State& state) {
  const auto cfg = PlanarCavityConfig::factorized(lorentz_pair(1.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(pressure_imag_axis(cfg).value);
}
BENCHMARK(BM_Pressure4d);

void BM_Pressure4dRoundtrip(benchmark::State& state) {
  const auto cfg = PlanarCavityConfig::factorized(lorentz_pair(1.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(pressure_roundtrip(cfg).value);
}
BENCHMARK(BM_Pressure4dRoundtrip)->Unit(benchmark::kMillisecond);

void BM_ThermalLargeDistance4d(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pressure_thermal_large_distance(0.5, 1.0, 0.2).value);
}
BENCHMARK(BM_ThermalLargeDistance4d);

} // namespace

BENCHMARK_MAIN();
