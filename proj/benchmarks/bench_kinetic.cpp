#include <benchmark/benchmark.h>

#include "rtc/chapman_enskog.hpp"
#include "rtc/equilibrium.hpp"
#include "rtc/kinetic_integrals.hpp"
#include "rtc/moment_systems.hpp"

namespace {

rtc::QuadratureConfig cfg() { return rtc::QuadratureConfig{}; }
rtc::GasParameters gas() { return rtc::GasParameters{}; }

void BM_JmnScaled(benchmark::State& state) {
  const double g = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rtc::j_mn_scaled(2, 1, g, cfg()));
}
BENCHMARK(BM_JmnScaled)->Arg(1)->Arg(100)->Arg(10000);

void BM_WeightedMoment(benchmark::State& state) {
  const double g = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rtc::weighted_j(4, 1, 2, g, gas(), cfg()));
}
BENCHMARK(BM_WeightedMoment)->Arg(1)->Arg(100)->Arg(10000);

void BM_ThetaTable(benchmark::State& state) {
  const double g = static_cast<double>(state.range(0));
  const rtc::ThermoState st = rtc::make_state(g, 1.0, gas(), cfg());
  for (auto _ : state)
    benchmark::DoNotOptimize(rtc::build_theta_table(st, gas(), cfg(), 6));
}
BENCHMARK(BM_ThetaTable)->Arg(1)->Arg(1000);

void BM_MiTransport(benchmark::State& state) {
  const rtc::ThermoState st = rtc::make_state(10.0, 1.0, gas(), cfg());
  const rtc::ThetaTable tab = rtc::build_theta_table(st, gas(), cfg(), 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(rtc::mi_transport(st, tab, state.range(0) == 2 ? 2 : 3, gas(), cfg()));
}
BENCHMARK(BM_MiTransport)->Arg(2)->Arg(3);

void BM_CemTransport(benchmark::State& state) {
  const rtc::ThermoState st = rtc::make_state(10.0, 1.0, gas(), cfg());
  const rtc::ThetaTable tab = rtc::build_theta_table(st, gas(), cfg(), 6);
  for (auto _ : state) benchmark::DoNotOptimize(rtc::cem_transport(st, tab, gas()));
}
BENCHMARK(BM_CemTransport);

}  // namespace

BENCHMARK_MAIN();
