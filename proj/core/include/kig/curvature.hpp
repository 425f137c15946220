#pragma once

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "kig/metric.hpp"
#include "kig/model.hpp"
#include "kig/wirtinger.hpp"

namespace kig {

// Connection coefficients Gamma_{ij,kbar} = d_i d_j d_kbar K, symmetric in
// the first pair.  For the rational families every coefficient with a d in
// the first pair vanishes identically and the remaining ones have closed
// forms; mixed first pairs (two different poles/zeros) vanish as well.
struct HermitianConnection {
  int n = 0;
  std::vector<Complex> coeffs;  // (i * n + j) * n + k

  explicit HermitianConnection(int dim = 0)
      : n(dim), coeffs(static_cast<std::size_t>(dim) * dim * dim, Complex(0.0)) {}
  Complex at(int i, int j, int k) const {
    return coeffs[(static_cast<std::size_t>(i) * n + j) * n + k];
  }
  Complex& at(int i, int j, int k) {
    return coeffs[(static_cast<std::size_t>(i) * n + j) * n + k];
  }
  double max_abs() const;
};

// Closed forms for rational families; finite differences of the potential for
// generic models.
HermitianConnection connection(const FilterModel& model, const ParameterPoint& at,
                               int truncation = kDefaultTruncation);

// Third-order finite differences of an arbitrary potential.
HermitianConnection connection_from_potential(const ScalarField& potential,
                                              const ParameterPoint& at);

// Ricci tensor R_{i jbar} = - d_i d_jbar log det g.
Eigen::MatrixXcd ricci(const FilterModel& model, const ParameterPoint& at,
                       int truncation = kDefaultTruncation);

// Scalar curvature 2 g^{i jbar} R_{i jbar}.
double scalar_curvature(const FilterModel& model, const ParameterPoint& at,
                        int truncation = kDefaultTruncation);

// Laplace-Beltrami operator 2 g^{i jbar} d_i d_jbar f at a point.
double laplace_beltrami(const HermitianMetric& m, const ScalarField& f,
                        const ParameterPoint& at);
double laplace_beltrami(const FilterModel& model, const ScalarField& f,
                        const ParameterPoint& at, int truncation = kDefaultTruncation);

// Squared gradient norm <grad f, grad f> in the real metric.
double gradient_norm_sq(const HermitianMetric& m, const ScalarField& f,
                        const ParameterPoint& at);

struct ClosednessReport {
  double max_deviation = 0.0;
  bool passed = true;
  std::array<int, 3> worst = {0, 0, 0};  // (i, j, kbar) of the worst pair
};

using MetricField = std::function<Eigen::MatrixXcd(const ParameterPoint&)>;

// Verifies d_i g_{j kbar} = d_j g_{i kbar} (the Kahler form is closed) by
// holomorphic finite differences of the metric entries.
ClosednessReport check_closedness(const FilterModel& model, const ParameterPoint& at,
                                  double tol = kClosednessTol,
                                  int truncation = kDefaultTruncation);
ClosednessReport check_closedness(const MetricField& g, const ParameterPoint& at,
                                  double tol = kClosednessTol,
                                  double step = kFdStepSecond);

}  // namespace kig
