#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "kig/experiment.hpp"
#include "kig/grid.hpp"
#include "kig/model.hpp"
#include "kig/prior.hpp"
#include "kig/simulate.hpp"
#include "kig/whittle.hpp"

namespace {

using kig::Complex;

const kig::FilterModel& ar1() {
  static const kig::FilterModel m = kig::FilterModel::arma({Complex(0.4, 0.0)}, {});
  return m;
}

std::vector<double> sample_path(int n) {
  std::mt19937_64 rng(7);
  return kig::simulate_process(ar1(), ar1().base_point(), n, rng, 1024);
}

void BM_Periodogram(benchmark::State& state) {
  const std::vector<double> x = sample_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kig::periodogram(x).back());
}
BENCHMARK(BM_Periodogram)->Arg(128)->Arg(512);

void BM_SpectralDensityRational(benchmark::State& state) {
  const std::vector<double> freqs = kig::fourier_frequencies(512);
  for (auto _ : state)
    benchmark::DoNotOptimize(kig::spectral_density(ar1(), ar1().base_point(), freqs).back());
}
BENCHMARK(BM_SpectralDensityRational);

void BM_WhittleFromParts(benchmark::State& state) {
  const std::vector<double> x = sample_path(512);
  const std::vector<double> I = kig::periodogram(x);
  const std::vector<double> S =
      kig::spectral_density(ar1(), ar1().base_point(), kig::fourier_frequencies(512));
  for (auto _ : state) benchmark::DoNotOptimize(kig::whittle_from_parts(I, S));
}
BENCHMARK(BM_WhittleFromParts);

void BM_Simulate(benchmark::State& state) {
  std::mt19937_64 rng(11);
  for (auto _ : state)
    benchmark::DoNotOptimize(kig::simulate_process(ar1(), ar1().base_point(), 256, rng, 1024).back());
}
BENCHMARK(BM_Simulate);

void BM_KlRiskMcTiny(benchmark::State& state) {
  kig::ExperimentConfig cfg{.model = ar1()};
  cfg.true_point = ar1().base_point();
  cfg.shrinkage = kig::PriorSpec{.family = kig::PsiFamily::Power, .a = 0.5, .u_star = 1.6};
  cfg.posterior_grid.poles = kig::PolarGrid{3, 4, 0.9, 0.0};
  cfg.train_length = 32;
  cfg.predict_length = 8;
  cfg.replications = 2;
  cfg.truncation = 128;
  cfg.seed = 5;
  for (auto _ : state) benchmark::DoNotOptimize(kig::kl_risk_mc(cfg).difference);
}
BENCHMARK(BM_KlRiskMcTiny);

}  // namespace
