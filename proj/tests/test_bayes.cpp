#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "kig/constants.hpp"
#include "kig/errors.hpp"
#include "kig/experiment.hpp"
#include "kig/posterior.hpp"
#include "kig/simulate.hpp"
#include "kig/transfer.hpp"
#include "kig/whittle.hpp"

using kig::Complex;
using kig::FilterModel;
using kig::ParameterPoint;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("fourier_frequencies") {
  const std::vector<double> w8 = kig::fourier_frequencies(8);
  REQUIRE(w8.size() == 3);
  CHECK(std::abs(w8[0] - kig::kPi / 4.0) < 1e-15);
  CHECK(std::abs(w8[1] - kig::kPi / 2.0) < 1e-15);
  CHECK(std::abs(w8[2] - 3.0 * kig::kPi / 4.0) < 1e-15);

  const std::vector<double> w9 = kig::fourier_frequencies(9);
  REQUIRE(w9.size() == 4);
  CHECK(std::abs(w9[3] - 8.0 * kig::kPi / 9.0) < 1e-15);

  CHECK(kig::fourier_frequencies(4).size() == 1);
  CHECK_THROWS_AS(kig::fourier_frequencies(3), kig::ValidationError);
}

TEST_CASE("periodogram frozen values") {
  // x = 1..8: I(pi/4) = 8 + 4 sqrt(2), I(pi/2) = 4, I(3pi/4) = 8 - 4 sqrt(2).
  const std::vector<double> x = {1, 2, 3, 4, 5, 6, 7, 8};
  const std::vector<double> I = kig::periodogram(x);
  REQUIRE(I.size() == 3);
  CHECK(std::abs(I[0] - 13.6568542494923802) < 1e-12);
  CHECK(std::abs(I[1] - 4.0) < 1e-12);
  CHECK(std::abs(I[2] - 2.34314575050761985) < 1e-12);
}

TEST_CASE("spectral density closed forms") {
  const FilterModel ar = FilterModel::arma({Complex(0.5)}, {});
  const std::vector<double> freqs = kig::fourier_frequencies(16);
  const std::vector<double> S = kig::spectral_density(ar, ar.base_point(), freqs);
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    const double expected = 1.0 / (1.25 - std::cos(freqs[j]));
    CHECK(std::abs(S[j] - expected) < 1e-14);
  }

  // Fractional d with a zero: |1-z|^{2d} |1 - mu z|^2 with z = e^{iw}.
  const FilterModel fi = FilterModel::arfima(Complex(0.3), {}, {Complex(-0.4)});
  const std::vector<double> Sf = kig::spectral_density(fi, fi.base_point(), freqs);
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    const Complex z = std::polar(1.0, freqs[j]);
    const double expected = std::pow(std::abs(1.0 - z), 0.6) *
                            std::norm(1.0 + 0.4 * z);
    CHECK(std::abs(Sf[j] - expected) < 1e-13);
  }

  // Complex d has no real spectral density.
  const FilterModel cd = FilterModel::arfima(Complex(0.1, 0.2), {}, {});
  CHECK_THROWS_WITH_AS(kig::spectral_density(cd, cd.base_point(), freqs),
                       doctest::Contains("real d"), kig::ValidationError);
}

TEST_CASE("generic Horner route matches the rational factor form") {
  const FilterModel arma = FilterModel::arma({Complex(0.5)}, {Complex(-0.3)});
  // Same filter presented as a generic log-transfer series
  // eta_k = (lambda^k - mu^k)/k.
  const FilterModel gen = FilterModel::generic(
      2,
      [](const ParameterPoint& p, int r) {
        std::vector<Complex> eta(static_cast<std::size_t>(r) + 1, Complex(0.0));
        Complex pl(1.0), pm(1.0);
        for (int k = 1; k <= r; ++k) {
          pl *= p.coords[0];
          pm *= p.coords[1];
          eta[static_cast<std::size_t>(k)] = (pl - pm) / static_cast<double>(k);
        }
        return eta;
      },
      ParameterPoint({Complex(0.5), Complex(-0.3)}), "arma-as-series");
  const std::vector<double> freqs = kig::fourier_frequencies(32);
  const std::vector<double> Sr = kig::spectral_density(arma, arma.base_point(), freqs);
  const std::vector<double> Sg = kig::spectral_density(gen, gen.base_point(), freqs, 512);
  for (std::size_t j = 0; j < freqs.size(); ++j) CHECK(std::abs(Sr[j] - Sg[j]) < 1e-10);
}

TEST_CASE("whittle log likelihood against an independent evaluation") {
  const FilterModel ar = FilterModel::arma({Complex(0.5)}, {});
  std::mt19937_64 rng(7);
  const std::vector<double> x = kig::simulate_process(ar, ar.base_point(), 64, rng, 256);

  // Long-double DFT and the AR(1) spectrum formula, sharing no code with the
  // library path.
  const int n = 64;
  long double acc = 0.0L;
  for (int j = 1; j <= 31; ++j) {
    const long double w = 2.0L * 3.14159265358979323846L * j / n;
    long double re = 0.0L, im = 0.0L;
    for (int t = 0; t < n; ++t) {
      re += static_cast<long double>(x[static_cast<std::size_t>(t)]) * std::cos(w * t);
      im -= static_cast<long double>(x[static_cast<std::size_t>(t)]) * std::sin(w * t);
    }
    const long double I = (re * re + im * im) / n;
    const long double S = 1.0L / (1.25L - std::cos(w));
    acc += std::log(S) + I / S;
  }
  const double expected = static_cast<double>(-acc);
  const double got = kig::whittle_loglik(x, ar, ar.base_point());
  CHECK(std::abs(got - expected) < 1e-10 * std::abs(expected));

  CHECK_THROWS_AS(kig::whittle_from_parts(std::vector<double>{1.0, 2.0},
                                          std::vector<double>{1.0}),
                  kig::ValidationError);
}

TEST_CASE("simulate_process matches the moving-average definition") {
  const FilterModel ar = FilterModel::arma({Complex(0.5)}, {});
  const int n = 32, R = 64;

  std::mt19937_64 lib_rng(99);
  const std::vector<double> x = kig::simulate_process(ar, ar.base_point(), n, lib_rng, R);
  REQUIRE(static_cast<int>(x.size()) == n);

  // x_t = sum_r h_r e_{t-r} with e_s = eps[s + R], drawn in one pass.
  const kig::ImpulseSeries s = kig::impulse_response(ar, ar.base_point(), R);
  std::mt19937_64 ref_rng(99);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> eps(static_cast<std::size_t>(n + R));
  for (double& e : eps) e = normal(ref_rng);
  for (int t = 0; t < n; ++t) {
    double acc = 0.0;
    for (int r = 0; r <= R; ++r)
      acc += s.h[static_cast<std::size_t>(r)].real() *
             eps[static_cast<std::size_t>(t + R - r)];
    CHECK(x[static_cast<std::size_t>(t)] == acc);
  }

  // Deterministic under the seed; sensitive to it.
  std::mt19937_64 rng_a(123), rng_b(123), rng_c(124);
  const std::vector<double> a = kig::simulate_process(ar, ar.base_point(), n, rng_a, R);
  const std::vector<double> b = kig::simulate_process(ar, ar.base_point(), n, rng_b, R);
  CHECK(a == b);
  CHECK(a != kig::simulate_process(ar, ar.base_point(), n, rng_c, R));
}

TEST_CASE("simulate_process statistics and validation") {
  const FilterModel ar = FilterModel::arma({Complex(0.5)}, {});
  std::mt19937_64 rng(2024);
  const int n = 4000;
  const std::vector<double> x = kig::simulate_process(ar, ar.base_point(), n, rng, 512);
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double var = 0.0, lag1 = 0.0;
  for (int t = 0; t < n; ++t) {
    const double c = x[static_cast<std::size_t>(t)] - mean;
    var += c * c;
    if (t + 1 < n) lag1 += c * (x[static_cast<std::size_t>(t + 1)] - mean);
  }
  var /= n;
  lag1 /= (n - 1);
  CHECK(std::abs(mean) < 0.15);
  CHECK(std::abs(var - 4.0 / 3.0) < 0.25);        // sum h_r^2 = 1/(1 - 1/4)
  CHECK(std::abs(lag1 / var - 0.5) < 0.08);       // AR(1) autocorrelation = lambda

  const FilterModel cplx = FilterModel::arma({Complex(0.5, 0.2)}, {});
  std::mt19937_64 rng2(1);
  CHECK_THROWS_WITH_AS(kig::simulate_process(cplx, cplx.base_point(), 16, rng2),
                       doctest::Contains("real filter"), kig::ValidationError);
  CHECK_THROWS_AS(kig::simulate_process(ar, ar.base_point(), 0, rng2),
                  kig::ValidationError);
}

TEST_CASE("log_sum_exp") {
  CHECK(std::abs(kig::log_sum_exp(std::vector<double>{0.0, 0.0}) - std::log(2.0)) < 1e-15);
  CHECK(kig::log_sum_exp(std::vector<double>{-kInf, 0.0}) == 0.0);
  CHECK(kig::log_sum_exp(std::vector<double>{-kInf, -kInf}) == -kInf);
  CHECK(kig::log_sum_exp(std::vector<double>{}) == -kInf);
  // Stable far outside the range of exp.
  CHECK(std::abs(kig::log_sum_exp(std::vector<double>{1000.0, 1000.0}) -
                 (1000.0 + std::log(2.0))) < 1e-12);
}

TEST_CASE("posterior weights and predictive density") {
  const std::vector<double> log_lik = {0.0, std::log(3.0)};
  const std::vector<double> flat = {0.0, 0.0};
  const std::vector<double> w = kig::posterior_log_weights(log_lik, flat);
  REQUIRE(w.size() == 2);
  CHECK(std::abs(w[0] - std::log(0.25)) < 1e-15);
  CHECK(std::abs(w[1] - std::log(0.75)) < 1e-15);

  // Zero-mass entries are allowed as long as one point survives.
  const std::vector<double> half_dead = kig::posterior_log_weights(
      log_lik, std::vector<double>{-kInf, 0.0});
  CHECK(half_dead[0] == -kInf);
  CHECK(std::abs(half_dead[1]) < 1e-15);

  CHECK_THROWS_AS(kig::posterior_log_weights(log_lik, std::vector<double>{0.0}),
                  kig::ValidationError);
  CHECK_THROWS_WITH_AS(
      kig::posterior_log_weights(log_lik, std::vector<double>{-kInf, -kInf}),
      doctest::Contains("positive mass"), kig::ValidationError);

  const std::vector<double> lw = {std::log(0.25), std::log(0.75)};
  const std::vector<double> ln = {std::log(2.0), std::log(4.0)};
  CHECK(std::abs(kig::log_predictive(lw, ln) - std::log(3.5)) < 1e-15);
  CHECK_THROWS_AS(kig::log_predictive(lw, std::vector<double>{0.0}),
                  kig::ValidationError);
}

namespace {

kig::ExperimentConfig tiny_config() {
  const FilterModel m = FilterModel::arma({Complex(0.4)}, {});
  kig::ExperimentConfig cfg{m, m.base_point()};
  cfg.posterior_grid.poles = kig::PolarGrid{3, 4, 0.85, 0.0};
  cfg.train_length = 16;
  cfg.predict_length = 8;
  cfg.replications = 3;
  cfg.truncation = 64;
  cfg.seed = 42;
  return cfg;
}

}  // namespace

TEST_CASE("kl_risk_mc: deterministic, finite, internally consistent") {
  kig::ExperimentConfig cfg = tiny_config();
  kig::PriorSpec prior;
  prior.u_star = kig::kPiSqOver6;
  cfg.shrinkage = prior;

  const kig::RiskEstimate a = kig::kl_risk_mc(cfg);
  CHECK(a.replications == 3);
  CHECK(a.grid_size == 12);
  CHECK(std::isfinite(a.risk_jeffreys));
  CHECK(std::isfinite(a.risk_shrinkage));
  CHECK(std::isfinite(a.difference));
  CHECK(a.stderr_difference >= 0.0);
  CHECK(std::abs(a.difference - (a.risk_jeffreys - a.risk_shrinkage)) < 1e-12);

  const kig::RiskEstimate b = kig::kl_risk_mc(cfg);
  CHECK(a.risk_jeffreys == b.risk_jeffreys);
  CHECK(a.risk_shrinkage == b.risk_shrinkage);
  CHECK(a.difference == b.difference);
  CHECK(a.stderr_difference == b.stderr_difference);

  kig::ExperimentConfig other = cfg;
  other.seed = 43;
  CHECK(kig::kl_risk_mc(other).risk_jeffreys != a.risk_jeffreys);
}

TEST_CASE("kl_risk_mc: the null configuration is exactly zero") {
  kig::ExperimentConfig cfg = tiny_config();  // no shrinkage prior
  const kig::RiskEstimate est = kig::kl_risk_mc(cfg);
  CHECK(est.difference == 0.0);
  CHECK(est.stderr_difference == 0.0);
  CHECK(est.risk_jeffreys == est.risk_shrinkage);
}

TEST_CASE("kl_risk_mc: configuration validation") {
  kig::ExperimentConfig cfg = tiny_config();

  kig::ExperimentConfig short_train = cfg;
  short_train.train_length = 4;
  CHECK_THROWS_AS(kig::kl_risk_mc(short_train), kig::ValidationError);

  kig::ExperimentConfig one_rep = cfg;
  one_rep.replications = 1;
  CHECK_THROWS_AS(kig::kl_risk_mc(one_rep), kig::ValidationError);

  kig::ExperimentConfig bad_point = cfg;
  bad_point.true_point = ParameterPoint({Complex(0.99)});
  CHECK_THROWS_AS(kig::kl_risk_mc(bad_point), kig::ValidationError);

  const FilterModel wide = FilterModel::arma(
      {Complex(0.1), Complex(0.2), Complex(0.3), Complex(0.4)}, {});
  kig::ExperimentConfig too_wide{wide, wide.base_point()};
  too_wide.replications = 2;
  CHECK_THROWS_WITH_AS(kig::kl_risk_mc(too_wide), doctest::Contains("3 complex"),
                       kig::ValidationError);

  kig::ExperimentConfig bad_prior = cfg;
  kig::PriorSpec exp_spec;
  exp_spec.family = kig::PsiFamily::Exp;
  exp_spec.u_star = 2.0;
  bad_prior.shrinkage = exp_spec;
  CHECK_THROWS_AS(kig::kl_risk_mc(bad_prior), kig::ValidationError);
}
