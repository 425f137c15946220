#pragma once

#include <Eigen/Dense>

#include "kig/model.hpp"
#include "kig/wirtinger.hpp"

namespace kig {

// The information metric g_{i jbar} at a parameter point, with its inverse
// and the checks every route must satisfy: Hermitian to kHermitianTol,
// positive definite, and g * g_inv = I to kInverseResidualTol.  Violations of
// the latter two raise NumericalError (they indicate a near-degenerate point,
// e.g. an almost cancelling pole/zero pair).
struct HermitianMetric {
  ParameterPoint point;
  Eigen::MatrixXcd g;      // Hermitized
  Eigen::MatrixXcd g_inv;
  double det = 1.0;        // det g (real and positive on the admissible domain)
  double log_abs_det = 0.0;
  double hermiticity_error = 0.0;  // max |g - g^H| before symmetrization
  double min_eigenvalue = 0.0;
  double inverse_residual = 0.0;   // max |g g_inv - I|
  int n() const { return static_cast<int>(g.rows()); }
};

// Truncated per-term sums of the series coefficients' derivatives.  The d-d
// entry gets its exact tail sum_{k>R} 1/k^2 restored (it is the only entry
// whose tail does not vanish geometrically).  Generic models are probed by
// finite differences of their log transfer coefficients and are refused
// (NotKahlerError) when the constant coefficient varies with the parameter.
HermitianMetric metric_series(const FilterModel& model, const ParameterPoint& at,
                              int truncation = kDefaultTruncation);

// Closed forms (rational families only): pi^2/6, log(1-x)/x, and geometric
// kernels 1/(1 - x ybar).
HermitianMetric metric_closed_form(const FilterModel& model, const ParameterPoint& at);

// Mixed Hessian of a potential by finite differences.
HermitianMetric metric_from_potential(const ScalarField& potential, const ParameterPoint& at);

// Default route: closed form for rational families, series otherwise.
HermitianMetric metric(const FilterModel& model, const ParameterPoint& at,
                       int truncation = kDefaultTruncation);

// The metric of the underlying real manifold in coordinates
// (Re xi^1..Re xi^n, Im xi^1..Im xi^n): G = 2 [[A, B], [-B, A]] for
// g = A + iB.  Satisfies det G = 4^n (det g)^2.
Eigen::MatrixXd real_metric(const HermitianMetric& m);

// log |det M| via partially pivoted LU (sum of log moduli of the pivots).
double log_abs_det(const Eigen::MatrixXcd& m);

// Exact tail sum_{k > truncation} 1/k^2 used by metric_series.
double inverse_square_tail(int truncation);

}  // namespace kig
