#include <benchmark/benchmark.h>

#include "nulq/analytic.hpp"
#include "nulq/constants.hpp"
#include "nulq/eos.hpp"
#include "nulq/stellar.hpp"

namespace {

using namespace nulq;

void BM_PressureUniform(benchmark::State& state) {
  const auto& pc = codata();
  const auto scheme = LevelScheme::uniform(pc, 2e15);
  const double eps = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pressure(pc, scheme, eps));
  }
}
BENCHMARK(BM_PressureUniform)->Arg(5)->Arg(17)->Arg(100);

void BM_PressureFit(benchmark::State& state) {
  const auto& pc = codata();
  const auto scheme =
      LevelScheme::fit(published_fit_constants(-0.4), 2.0);
  const double eps = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pressure(pc, scheme, eps));
  }
}
BENCHMARK(BM_PressureFit)->Arg(5)->Arg(17)->Arg(100);

void BM_EosTable(benchmark::State& state) {
  const auto& pc = codata();
  const auto scheme = LevelScheme::uniform(pc, 2e15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eos_table(pc, scheme, 2.0, 17.0, 160));
  }
}
BENCHMARK(BM_EosTable)->Unit(benchmark::kMillisecond);

void BM_StructureNonMagnetic(benchmark::State& state) {
  const auto& pc = codata();
  const auto field = PiecewiseFieldProfile::no_field();
  StructureOptions opt;
  opt.step_km = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_structure(pc, 17.0, field, opt));
  }
}
BENCHMARK(BM_StructureNonMagnetic)->Unit(benchmark::kMillisecond);

void BM_StructureMagnetized(benchmark::State& state) {
  const auto& pc = codata();
  const auto field = PiecewiseFieldProfile::literal_decay(2e15);
  StructureOptions opt;
  opt.step_km = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_structure(pc, 17.0, field, opt));
  }
}
BENCHMARK(BM_StructureMagnetized)->Unit(benchmark::kMillisecond);

}  // namespace
