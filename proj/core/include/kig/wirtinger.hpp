#pragma once

#include <functional>

#include <Eigen/Dense>

#include "kig/model.hpp"

namespace kig {

// A scalar function of a parameter point together with the finite-difference
// policy used to probe it.  Derivatives are taken with respect to the
// complexified coordinates via Wirtinger combinations of central differences
// along the 2n real axes (axis a < n: real part of coordinate a; axis n + a:
// imaginary part).
struct ScalarField {
  std::function<double(const ParameterPoint&)> eval;
  // Stencil admissibility: box_ok(center, r) answers whether every point whose
  // coordinates differ from center by at most r along each real axis can be
  // evaluated.  Steps are halved (at most kFdMaxHalvings times) until the
  // stencil fits; leave empty for fields defined everywhere.
  std::function<bool(const ParameterPoint&, double)> box_ok;
  double step_second = kFdStepSecond;  // relative step, second-order stencils
  double step_third = kFdStepThird;    // relative step, third-order stencils
};

// Field whose stencils are confined to the admissible domain of a model.
ScalarField domain_field(const FilterModel& model,
                         std::function<double(const ParameterPoint&)> eval);

// Step selection (relative to the largest coordinate modulus, floored at 1),
// shrunk until box_ok admits a stencil of the given derivative order.
// Throws NumericalError when the stencil cannot be made to fit.
double fd_step(const std::function<bool(const ParameterPoint&, double)>& box_ok,
               const ParameterPoint& at, double base_step, int order);

// Mixed Hessian H(i, j) = d^2 f / (d xi^i d xibar^j).  Hermitian by
// construction with a real diagonal.
Eigen::MatrixXcd mixed_hessian(const ScalarField& f, const ParameterPoint& at);

// Third-order coefficient d^3 f / (d xi^i d xi^j d xibar^k).
Complex mixed_third(const ScalarField& f, const ParameterPoint& at, int i, int j, int k);

// Gradient with respect to the 2n real coordinates.
Eigen::VectorXd real_gradient(const ScalarField& f, const ParameterPoint& at);

}  // namespace kig
