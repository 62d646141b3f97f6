#include <benchmark/benchmark.h>

#include "nulq/analytic.hpp"
#include "nulq/constants.hpp"
#include "nulq/eigensolver.hpp"
#include "nulq/qspeed.hpp"

namespace {

using namespace nulq;

void BM_SolveGroundUniform(benchmark::State& state) {
  const auto& pc = codata();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_level(pc, {1e15, 0.0}, {0, Spin::up, 0}, 1e-6));
  }
}
BENCHMARK(BM_SolveGroundUniform)->Unit(benchmark::kMillisecond);

void BM_SolveGroundSteep(benchmark::State& state) {
  const auto& pc = codata();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_level(pc, {1e15, 2.0}, {0, Spin::up, 0}, 1e-6));
  }
}
BENCHMARK(BM_SolveGroundSteep)->Unit(benchmark::kMillisecond);

void BM_SolveGroundShallow(benchmark::State& state) {
  const auto& pc = codata();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_level(pc, {1e15, -0.8}, {0, Spin::up, 0}, 1e-6));
  }
}
BENCHMARK(BM_SolveGroundShallow)->Unit(benchmark::kMillisecond);

void BM_SpectrumSixLevels(benchmark::State& state) {
  const auto& pc = codata();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        spectrum(pc, {1e15, 2.0}, 0, Spin::down, 5, {}));
  }
}
BENCHMARK(BM_SpectrumSixLevels)->Unit(benchmark::kMillisecond);

void BM_QuantumSpeedPoint(benchmark::State& state) {
  const auto& pc = codata();
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantum_speed(pc, {1e16, 1.0}, Spin::down));
  }
}
BENCHMARK(BM_QuantumSpeedPoint)->Unit(benchmark::kMillisecond);

void BM_VariationalBound(benchmark::State& state) {
  const auto& pc = codata();
  double n = -0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(variational_ground(pc, {1e15, n}, Spin::up));
    n = n < 4.0 ? n + 0.5 : -0.5;
  }
}
BENCHMARK(BM_VariationalBound);

}  // namespace

BENCHMARK_MAIN();
