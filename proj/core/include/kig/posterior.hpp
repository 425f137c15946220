#pragma once

#include <span>
#include <vector>

namespace kig {

// log sum_k exp(v_k); -inf entries are allowed (zero mass).
double log_sum_exp(std::span<const double> v);

// Normalized log posterior weights from per-point log likelihoods and
// (unnormalized) log priors.  At least one entry must carry positive mass.
std::vector<double> posterior_log_weights(std::span<const double> log_lik,
                                          std::span<const double> log_prior);

// log of the posterior predictive density: log sum_k w_k exp(log_lik_new_k)
// with log w_k the normalized log weights.
double log_predictive(std::span<const double> log_weights,
                      std::span<const double> log_lik_new);

}  // namespace kig
