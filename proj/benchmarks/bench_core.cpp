#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "gravwave/drive.hpp"
#include "gravwave/dynamics.hpp"
#include "gravwave/quasi_resonance.hpp"
#include "gravwave/resonance.hpp"
#include "gravwave/rk78.hpp"
#include "gravwave/transform.hpp"

namespace {

using namespace gravwave;

DriveConfig bench_drive(int n) {
  DriveConfig drive;
  drive.k_low = n / 32.0;
  drive.k_high = n / 32.0 * 1.5;
  drive.amplitude_prefactor = 2.0 * std::pow(std::numbers::pi, 3) / n;
  return drive;
}

void BM_ForwardTransform(benchmark::State& bench) {
  const int n = static_cast<int>(bench.range(0));
  auto grid = std::make_shared<const SpectralGrid>(n, n);
  const auto state = initial_state(grid, bench_drive(n), 1);
  const auto physical = inverse_transform(state.eta);
  for (auto _ : bench) benchmark::DoNotOptimize(forward_transform(physical));
}
BENCHMARK(BM_ForwardTransform)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_Rhs(benchmark::State& bench) {
  const int n = static_cast<int>(bench.range(0));
  auto grid = std::make_shared<const SpectralGrid>(n, n);
  const auto state = initial_state(grid, bench_drive(n), 1);
  RhsEvaluator rhs(grid);
  Tendency out{SpectralField(grid), SpectralField(grid)};
  for (auto _ : bench) {
    rhs.evaluate(state.eta, state.psi, PhysicsParams{1.0, 0.02}, 0.0, out);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Rhs)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Rk78Step(benchmark::State& bench) {
  const int n = static_cast<int>(bench.range(0));
  auto grid = std::make_shared<const SpectralGrid>(n, n);
  auto state = initial_state(grid, bench_drive(n), 1);
  Rk78Stepper stepper(grid);
  for (auto _ : bench) benchmark::DoNotOptimize(stepper.advance(state, PhysicsParams{1.0, 0.02}, 1e-3));
}
BENCHMARK(BM_Rk78Step)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ExactResonanceCheck(benchmark::State& bench) {
  for (auto _ : bench) {
    benchmark::DoNotOptimize(is_exact_resonance({495, 90}, {64, 128}, {359, 118}, {200, 100}));
  }
}
BENCHMARK(BM_ExactResonanceCheck)->Unit(benchmark::kMicrosecond);

void BM_BruteForce(benchmark::State& bench) {
  for (auto _ : bench) benchmark::DoNotOptimize(brute_force_exact(bench.range(0)));
}
BENCHMARK(BM_BruteForce)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_QuasiGenerations(benchmark::State& bench) {
  const auto ring = ring_modes(6.0, 9.0, 64);
  const double delta = bench.range(0) * 1e-6;
  for (auto _ : bench) benchmark::DoNotOptimize(quasi_generations(ring, delta, 64));
}
BENCHMARK(BM_QuasiGenerations)->Arg(0)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
