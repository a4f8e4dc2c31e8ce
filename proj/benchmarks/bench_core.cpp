#include <benchmark/benchmark.h>

#include <random>

#include "enls/bounds.hpp"
#include "enls/fft.hpp"
#include "enls/functionals.hpp"
#include "enls/initial_data.hpp"
#include "enls/solver.hpp"
#include "enls/symbols.hpp"

using namespace enls;

namespace {

void BM_Delta4(benchmark::State& state) {
  const MultiplierParams p(16.0, -0.125);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(-500.0, 500.0);
  std::vector<std::array<double, 4>> xs(1024);
  for (auto& x : xs) {
    x = {U(rng), U(rng), U(rng), 0.0};
    x[3] = -(x[0] + x[1] + x[2]);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = xs[i++ & 1023];
    benchmark::DoNotOptimize(delta4(x[0], x[1], x[2], x[3], p));
  }
}
BENCHMARK(BM_Delta4);

void BM_Lambda4Delta4(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const Spectrum u = random_band_limited(GridSpec(2 * kPi, M), M / 3, 1);
  const MultiplierParams p(4.0, -0.125);
  for (auto _ : state) benchmark::DoNotOptimize(lambda4_delta4(u, p));
  state.SetComplexityN(M);
}
BENCHMARK(BM_Lambda4Delta4)->RangeMultiplier(2)->Range(32, 128)->Complexity();

void BM_Lambda6Delta6(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const Spectrum u = random_band_limited(GridSpec(2 * kPi, M), M / 3, 1);
  const MultiplierParams p(4.0, -0.125);
  for (auto _ : state) benchmark::DoNotOptimize(lambda6_delta6(u, p));
}
BENCHMARK(BM_Lambda6Delta6)->Arg(32)->Arg(64);

// One IF-RK4 step per iteration.
void BM_SolverStep(benchmark::State& state) {
  const GridSpec g(64.0, static_cast<int>(state.range(0)));
  const FieldSample u0 = gaussian_bump(g, 1.0, 4.0);
  SolverConfig sc;
  sc.equation = {EquationForm::kFull, 1.0, 1.0};
  sc.dt = 1e-3;
  sc.t_end = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(solve(u0, sc));
}
BENCHMARK(BM_SolverStep)->Arg(256)->Arg(1024);

void BM_TrilinearRatio(benchmark::State& state) {
  const GridSpec g(2 * kPi, 128);
  const SpaceTimeField f = free_wave(random_band_limited(g, 8, 2), 0.05, 256);
  for (auto _ : state) benchmark::DoNotOptimize(trilinear_ratio(f, f, f, -0.125, 0.6, -0.06));
}
BENCHMARK(BM_TrilinearRatio);

}  // namespace
BENCHMARK_MAIN();
