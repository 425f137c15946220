#pragma once

#include <cstdint>
#include <optional>

#include "kig/grid.hpp"
#include "kig/model.hpp"
#include "kig/prior.hpp"

namespace kig {

// Paired Monte Carlo comparison of predictive risk under the Jeffreys prior
// and under a shrinkage prior psi * Jeffreys, both supported on the same
// posterior grid.  Each replication simulates a training path and a held-out
// continuation from the true point, forms both grid posteriors by Whittle
// likelihood, and scores the held-out block by its log predictive density.
struct ExperimentConfig {
  FilterModel model;
  ParameterPoint true_point;
  std::optional<PriorSpec> shrinkage;  // absent: both arms use Jeffreys (null)
  GridSpec posterior_grid = default_posterior_grid();
  int train_length = 200;
  int predict_length = 50;
  int replications = 500;
  int truncation = 1024;
  std::uint64_t seed = 20240901;
};

struct RiskEstimate {
  int replications = 0;
  std::size_t grid_size = 0;
  // Kullback-Leibler predictive risks (up to the common entropy constant).
  double risk_jeffreys = 0.0;
  double risk_shrinkage = 0.0;
  // risk_jeffreys - risk_shrinkage with its paired standard error; exactly
  // zero (0 +- 0) for the null configuration.
  double difference = 0.0;
  double stderr_difference = 0.0;
};

RiskEstimate kl_risk_mc(const ExperimentConfig& config);

}  // namespace kig
