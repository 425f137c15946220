#include <benchmark/benchmark.h>

#include <complex>

#include "kig/curvature.hpp"
#include "kig/dilog.hpp"
#include "kig/metric.hpp"
#include "kig/model.hpp"
#include "kig/transfer.hpp"
#include "kig/wirtinger.hpp"

namespace {

using kig::Complex;

const kig::FilterModel& probe() {
  static const kig::FilterModel m =
      kig::FilterModel::arfima(0.23, {Complex(0.5, 0.2)}, {Complex(0.1, -0.6)});
  return m;
}

void BM_Dilog(benchmark::State& state) {
  const std::complex<double> z(0.55, -0.3);
  for (auto _ : state) benchmark::DoNotOptimize(kig::dilog(z));
}
BENCHMARK(BM_Dilog);

void BM_PotentialClosed(benchmark::State& state) {
  const kig::FilterModel& m = probe();
  const kig::ParameterPoint at = m.base_point();
  for (auto _ : state) benchmark::DoNotOptimize(kig::kahler_potential(m, at));
}
BENCHMARK(BM_PotentialClosed);

void BM_PotentialSeries(benchmark::State& state) {
  const kig::FilterModel& m = probe();
  const kig::ParameterPoint at = m.base_point();
  const int truncation = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kig::kahler_potential_truncated(m, at, truncation));
}
BENCHMARK(BM_PotentialSeries)->Arg(512)->Arg(4096);

void BM_MetricClosed(benchmark::State& state) {
  const kig::FilterModel& m = probe();
  const kig::ParameterPoint at = m.base_point();
  for (auto _ : state) benchmark::DoNotOptimize(kig::metric_closed_form(m, at).det);
}
BENCHMARK(BM_MetricClosed);

void BM_MetricSeries(benchmark::State& state) {
  const kig::FilterModel& m = probe();
  const kig::ParameterPoint at = m.base_point();
  const int truncation = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kig::metric_series(m, at, truncation).det);
}
BENCHMARK(BM_MetricSeries)->Arg(512)->Arg(4096);

void BM_MetricFromPotential(benchmark::State& state) {
  const kig::FilterModel& m = probe();
  const kig::ParameterPoint at = m.base_point();
  const kig::ScalarField pot = kig::domain_field(
      m, [&](const kig::ParameterPoint& p) { return kig::kahler_potential(m, p); });
  for (auto _ : state) benchmark::DoNotOptimize(kig::metric_from_potential(pot, at).det);
}
BENCHMARK(BM_MetricFromPotential);

void BM_ConnectionClosed(benchmark::State& state) {
  const kig::FilterModel& m = probe();
  const kig::ParameterPoint at = m.base_point();
  for (auto _ : state) benchmark::DoNotOptimize(kig::connection(m, at).max_abs());
}
BENCHMARK(BM_ConnectionClosed);

void BM_ConnectionFromPotential(benchmark::State& state) {
  const kig::FilterModel& m = probe();
  const kig::ParameterPoint at = m.base_point();
  const kig::ScalarField pot = kig::domain_field(
      m, [&](const kig::ParameterPoint& p) { return kig::kahler_potential(m, p); });
  for (auto _ : state)
    benchmark::DoNotOptimize(kig::connection_from_potential(pot, at).max_abs());
}
BENCHMARK(BM_ConnectionFromPotential);

void BM_Ricci(benchmark::State& state) {
  const kig::FilterModel& m = probe();
  const kig::ParameterPoint at = m.base_point();
  for (auto _ : state) benchmark::DoNotOptimize(kig::ricci(m, at).norm());
}
BENCHMARK(BM_Ricci);

void BM_LaplaceBeltrami(benchmark::State& state) {
  const kig::FilterModel& m = probe();
  const kig::ParameterPoint at = m.base_point();
  const kig::ScalarField pot = kig::domain_field(
      m, [&](const kig::ParameterPoint& p) { return kig::kahler_potential(m, p); });
  for (auto _ : state) benchmark::DoNotOptimize(kig::laplace_beltrami(m, pot, at));
}
BENCHMARK(BM_LaplaceBeltrami);

}  // namespace

BENCHMARK_MAIN();
