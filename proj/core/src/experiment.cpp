#include "kig/experiment.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "kig/errors.hpp"
#include "kig/posterior.hpp"
#include "kig/simulate.hpp"
#include "kig/whittle.hpp"

namespace kig {

double log_sum_exp(std::span<const double> v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double acc = 0.0;
  for (double x : v)
    if (std::isfinite(x)) acc += std::exp(x - m);
  return m + std::log(acc);
}

std::vector<double> posterior_log_weights(std::span<const double> log_lik,
                                          std::span<const double> log_prior) {
  if (log_lik.size() != log_prior.size() || log_lik.empty())
    throw ValidationError("posterior: likelihood/prior size mismatch");
  std::vector<double> lw(log_lik.size());
  for (std::size_t k = 0; k < lw.size(); ++k) lw[k] = log_lik[k] + log_prior[k];
  const double z = log_sum_exp(lw);
  if (!std::isfinite(z))
    throw ValidationError("posterior: no grid point carries positive mass");
  for (double& x : lw) x -= z;
  return lw;
}

double log_predictive(std::span<const double> log_weights,
                      std::span<const double> log_lik_new) {
  if (log_weights.size() != log_lik_new.size() || log_weights.empty())
    throw ValidationError("posterior: weights/likelihood size mismatch");
  std::vector<double> v(log_weights.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = log_weights[k] + log_lik_new[k];
  return log_sum_exp(v);
}

RiskEstimate kl_risk_mc(const ExperimentConfig& config) {
  const FilterModel& model = config.model;
  model.require_in_domain(config.true_point);
  if (config.train_length < 8 || config.predict_length < 8)
    throw ValidationError("experiment: train and predict lengths must be >= 8");
  if (config.replications < 2)
    throw ValidationError("experiment: need at least 2 replications");
  if (config.truncation < 1) throw ValidationError("experiment: truncation must be >= 1");
  const int n_complex = model.dim();
  if (n_complex - (model.has_d() ? 1 : 0) > 3)
    throw ValidationError(
        "experiment: grid posteriors are limited to 3 complex coordinates");
  if (config.shrinkage) validate_prior_spec(*config.shrinkage, model);

  const std::vector<ParameterPoint> grid = make_domain_grid(model, config.posterior_grid);
  if (grid.empty()) throw ValidationError("experiment: posterior grid is empty");

  const int N = config.train_length, M = config.predict_length;
  const std::vector<double> wx = fourier_frequencies(N);
  const std::vector<double> wy = fourier_frequencies(M);

  // Per grid point: spectra on both frequency sets and log prior masses.
  const std::size_t G = grid.size();
  std::vector<std::vector<double>> Sx(G), Sy(G);
  std::vector<double> log_det(G);
  std::vector<double> sum_log_sx(G, 0.0), sum_log_sy(G, 0.0);
  for (std::size_t g = 0; g < G; ++g) {
    Sx[g] = spectral_density(model, grid[g], wx, config.truncation);
    Sy[g] = spectral_density(model, grid[g], wy, config.truncation);
    for (double& s : Sx[g]) {
      sum_log_sx[g] += std::log(s);
      s = 1.0 / s;  // store reciprocals for the replication loop
    }
    for (double& s : Sy[g]) {
      sum_log_sy[g] += std::log(s);
      s = 1.0 / s;
    }
    log_det[g] = metric(model, grid[g], config.truncation).log_abs_det;
  }
  std::vector<double> log_prior_j(G), log_prior_s(G);
  for (std::size_t g = 0; g < G; ++g) {
    log_prior_j[g] = log_det[g];
    if (config.shrinkage) {
      const double tau = tau_value(*config.shrinkage, model, grid[g]);
      log_prior_s[g] = tau > 0.0
                           ? log_det[g] + std::log(psi_from_tau(*config.shrinkage, tau))
                           : -std::numeric_limits<double>::infinity();
    } else {
      log_prior_s[g] = log_det[g];
    }
  }

  const std::vector<double> Sty =
      spectral_density(model, config.true_point, wy, config.truncation);

  auto whittle_cached = [](std::span<const double> I, const std::vector<double>& inv_s,
                           double sum_log_s) {
    double acc = 0.0;
    for (std::size_t j = 0; j < I.size(); ++j) acc += I[j] * inv_s[j];
    return -(sum_log_s + acc);
  };

  const int R = config.replications;
  std::vector<double> pred_j(static_cast<std::size_t>(R)), pred_s(static_cast<std::size_t>(R)),
      ll_true(static_cast<std::size_t>(R));
  std::vector<double> ll_x(G), ll_y(G);
  for (int rep = 0; rep < R; ++rep) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                      static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(rep)};
    std::mt19937_64 rng(seq);
    const std::vector<double> path =
        simulate_process(model, config.true_point, N + M, rng, config.truncation);
    const std::span<const double> x(path.data(), static_cast<std::size_t>(N));
    const std::span<const double> y(path.data() + N, static_cast<std::size_t>(M));
    const std::vector<double> Ix = periodogram(x);
    const std::vector<double> Iy = periodogram(y);
    for (std::size_t g = 0; g < G; ++g) {
      ll_x[g] = whittle_cached(Ix, Sx[g], sum_log_sx[g]);
      ll_y[g] = whittle_cached(Iy, Sy[g], sum_log_sy[g]);
    }
    const std::vector<double> w_j = posterior_log_weights(ll_x, log_prior_j);
    const std::vector<double> w_s = posterior_log_weights(ll_x, log_prior_s);
    const std::size_t r = static_cast<std::size_t>(rep);
    pred_j[r] = log_predictive(w_j, ll_y);
    pred_s[r] = log_predictive(w_s, ll_y);
    double acc = 0.0;
    for (std::size_t j = 0; j < Iy.size(); ++j) acc += std::log(Sty[j]) + Iy[j] / Sty[j];
    ll_true[r] = -acc;
  }

  RiskEstimate est;
  est.replications = R;
  est.grid_size = G;
  double mean_j = 0.0, mean_s = 0.0, mean_d = 0.0;
  for (int r = 0; r < R; ++r) {
    const std::size_t i = static_cast<std::size_t>(r);
    mean_j += ll_true[i] - pred_j[i];
    mean_s += ll_true[i] - pred_s[i];
    mean_d += pred_s[i] - pred_j[i];
  }
  mean_j /= R;
  mean_s /= R;
  mean_d /= R;
  double var_d = 0.0;
  for (int r = 0; r < R; ++r) {
    const std::size_t i = static_cast<std::size_t>(r);
    const double dev = (pred_s[i] - pred_j[i]) - mean_d;
    var_d += dev * dev;
  }
  var_d /= (R - 1);
  est.risk_jeffreys = mean_j;
  est.risk_shrinkage = mean_s;
  est.difference = mean_d;
  est.stderr_difference = std::sqrt(var_d / R);
  return est;
}

}  // namespace kig
