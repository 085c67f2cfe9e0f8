#include <benchmark/benchmark.h>

#include <cmath>

#include "lsq/dressed.hpp"
#include "lsq/liouville.hpp"
#include "lsq/spectrum.hpp"
#include "lsq/variance.hpp"

namespace {

lsq::SystemParams strong_field() {
  return lsq::make_params(0.1, 1.0, 15.0, -15.0, 30.0, 30.0, 10.0, 0.0);
}

lsq::SystemParams resonant() {
  return lsq::make_params(20.0, 1.0, 0.0, 0.0, 8.0, 8.0, 3.0, -M_PI / 2.0);
}

void BM_BuildLiouvillian(benchmark::State& state) {
  const lsq::SystemParams p = strong_field();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsq::build_liouvillian(p));
  }
}
BENCHMARK(BM_BuildLiouvillian);

void BM_SteadyState(benchmark::State& state) {
  const lsq::LiouvilleSystem sys = lsq::build_liouvillian(strong_field());
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsq::steady_state(sys));
  }
}
BENCHMARK(BM_SteadyState);

void BM_Diagonalize(benchmark::State& state) {
  const lsq::SystemParams p = strong_field();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsq::diagonalize(p));
  }
}
BENCHMARK(BM_Diagonalize);

void BM_SpectrumPoint(benchmark::State& state) {
  const lsq::LiouvilleSystem sys = lsq::build_liouvillian(strong_field());
  const lsq::StateVector psi = lsq::steady_state(sys);
  const std::vector<double> grid = {32.0, 32.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lsq::squeezing_spectrum(sys, psi, lsq::QuadraturePhase(0.0), grid));
  }
}
BENCHMARK(BM_SpectrumPoint);

void BM_SpectrumGrid2001(benchmark::State& state) {
  const lsq::LiouvilleSystem sys = lsq::build_liouvillian(strong_field());
  const lsq::StateVector psi = lsq::steady_state(sys);
  const auto grid = lsq::default_omega_grid(90.93);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lsq::squeezing_spectrum(sys, psi, lsq::QuadraturePhase(0.0), grid));
  }
}
BENCHMARK(BM_SpectrumGrid2001);

void BM_Evolve(benchmark::State& state) {
  const lsq::LiouvilleSystem sys = lsq::build_liouvillian(resonant());
  lsq::StateVector psi0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsq::evolve(sys, psi0, 1.0, 1e-3));
  }
}
BENCHMARK(BM_Evolve);

void BM_AnalyticSqueezing(benchmark::State& state) {
  const lsq::SystemParams p = resonant();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsq::squeezing_parameter_analytic(p));
  }
}
BENCHMARK(BM_AnalyticSqueezing);

void BM_MinimizeOmega3(benchmark::State& state) {
  const lsq::SystemParams p = resonant();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsq::minimize_over_omega3(p, 0.5, 10.0));
  }
}
BENCHMARK(BM_MinimizeOmega3);

}  // namespace

BENCHMARK_MAIN();
