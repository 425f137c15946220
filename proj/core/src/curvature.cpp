#include "kig/curvature.hpp"

#include <cmath>

#include "kig/errors.hpp"
#include "kig/transfer.hpp"

namespace kig {
namespace {

// T(x) = sum_{m>=0} (m+1)/(m+2) x^m = 1/(1-x) + log(1-x)/x^2 + 1/x; T(0) = 1/2.
// The closed expression loses digits for small |x|, so switch to the series.
Complex t_kernel(Complex x) {
  if (std::abs(x) < 0.25) {
    Complex term(1.0);
    Complex acc(0.0);
    for (int m = 0; m <= 40; ++m) {
      const Complex add = term * (static_cast<double>(m + 1) / (m + 2));
      acc += add;
      if (std::abs(add) < 1e-18 * (1.0 + std::abs(acc))) break;
      term *= x;
    }
    return acc;
  }
  const Complex one(1.0);
  return one / (one - x) + std::log(one - x) / (x * x) + one / x;
}

// Metric matrix only (no inverse / eigen checks): the finite-difference hot
// path for log det g.
Eigen::MatrixXcd metric_matrix(const FilterModel& model, const ParameterPoint& at,
                               int truncation) {
  if (model.kind() == ModelKind::GenericSeries)
    return metric_series(model, at, truncation).g;
  return metric_closed_form(model, at).g;
}

double contract_with_inverse(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& g_inv) {
  return 2.0 * (a * g_inv).trace().real();
}

}  // namespace

double HermitianConnection::max_abs() const {
  double m = 0.0;
  for (const Complex& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

HermitianConnection connection(const FilterModel& model, const ParameterPoint& at,
                               int truncation) {
  model.require_in_domain(at);
  if (model.kind() == ModelKind::GenericSeries) {
    ScalarField f = domain_field(model, [&model, truncation](const ParameterPoint& p) {
      return kahler_potential_truncated(model, p, truncation);
    });
    return connection_from_potential(f, at);
  }
  const int n = model.dim();
  const int off = model.has_d() ? 1 : 0;
  const int p = model.num_poles(), q = model.num_zeros();
  const auto poles = model.poles_of(at);
  const auto zeros = model.zeros_of(at);
  HermitianConnection c(n);
  const Complex one(1.0);
  for (int a = 0; a < p; ++a) {
    const int ia = off + a;
    if (model.has_d()) c.at(ia, ia, 0) = -t_kernel(poles[a]);
    for (int b = 0; b < p; ++b) {
      const Complex lb = std::conj(poles[b]);
      const Complex den = one - poles[a] * lb;
      c.at(ia, ia, off + b) = lb / (den * den);
    }
    for (int b = 0; b < q; ++b) {
      const Complex mb = std::conj(zeros[b]);
      const Complex den = one - poles[a] * mb;
      c.at(ia, ia, off + p + b) = -mb / (den * den);
    }
  }
  for (int a = 0; a < q; ++a) {
    const int ia = off + p + a;
    if (model.has_d()) c.at(ia, ia, 0) = t_kernel(zeros[a]);
    for (int b = 0; b < p; ++b) {
      const Complex lb = std::conj(poles[b]);
      const Complex den = one - zeros[a] * lb;
      c.at(ia, ia, off + b) = -lb / (den * den);
    }
    for (int b = 0; b < q; ++b) {
      const Complex mb = std::conj(zeros[b]);
      const Complex den = one - zeros[a] * mb;
      c.at(ia, ia, off + p + b) = mb / (den * den);
    }
  }
  return c;
}

HermitianConnection connection_from_potential(const ScalarField& potential,
                                              const ParameterPoint& at) {
  const int n = at.dim();
  HermitianConnection c(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Complex v = mixed_third(potential, at, i, j, k);
        c.at(i, j, k) = v;
        c.at(j, i, k) = v;
      }
  return c;
}

Eigen::MatrixXcd ricci(const FilterModel& model, const ParameterPoint& at, int truncation) {
  model.require_in_domain(at);
  ScalarField f = domain_field(model, [&model, truncation](const ParameterPoint& p) {
    return log_abs_det(metric_matrix(model, p, truncation));
  });
  return -mixed_hessian(f, at);
}

double scalar_curvature(const FilterModel& model, const ParameterPoint& at, int truncation) {
  const HermitianMetric m = metric(model, at, truncation);
  return contract_with_inverse(ricci(model, at, truncation), m.g_inv);
}

double laplace_beltrami(const HermitianMetric& m, const ScalarField& f,
                        const ParameterPoint& at) {
  return contract_with_inverse(mixed_hessian(f, at), m.g_inv);
}

double laplace_beltrami(const FilterModel& model, const ScalarField& f,
                        const ParameterPoint& at, int truncation) {
  return laplace_beltrami(metric(model, at, truncation), f, at);
}

double gradient_norm_sq(const HermitianMetric& m, const ScalarField& f,
                        const ParameterPoint& at) {
  const Eigen::VectorXd v = real_gradient(f, at);
  const Eigen::MatrixXd G = real_metric(m);
  return v.dot(G.llt().solve(v));
}

namespace {

ClosednessReport closedness_impl(const std::function<Eigen::MatrixXcd(const ParameterPoint&)>& g,
                                 const ParameterPoint& at, int n, double tol, double h) {
  ClosednessReport rep;
  if (n <= 1) return rep;
  // Holomorphic derivative of every metric entry along each coordinate:
  // d_i = (d/dRe - i d/dIm)/2 by central differences.
  std::vector<Eigen::MatrixXcd> dg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ParameterPoint pr1 = at, pr2 = at, pi1 = at, pi2 = at;
    pr1.coords[i] += h;
    pr2.coords[i] -= h;
    pi1.coords[i] += Complex(0.0, h);
    pi2.coords[i] -= Complex(0.0, h);
    const Eigen::MatrixXcd dre = (g(pr1) - g(pr2)) / (2.0 * h);
    const Eigen::MatrixXcd dim = (g(pi1) - g(pi2)) / (2.0 * h);
    dg[static_cast<std::size_t>(i)] = 0.5 * (dre - Complex(0.0, 1.0) * dim);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double dev = std::abs(dg[static_cast<std::size_t>(i)](j, k) -
                                    dg[static_cast<std::size_t>(j)](i, k));
        if (dev > rep.max_deviation) {
          rep.max_deviation = dev;
          rep.worst = {i, j, k};
        }
      }
  rep.passed = rep.max_deviation <= tol;
  return rep;
}

}  // namespace

ClosednessReport check_closedness(const FilterModel& model, const ParameterPoint& at,
                                  double tol, int truncation) {
  model.require_in_domain(at);
  const int n = model.dim();
  if (n <= 1) return ClosednessReport{};
  const double h =
      fd_step([&](const ParameterPoint& p, double r) { return model.in_domain(p, r); }, at,
              kFdStepSecond, 1);
  return closedness_impl(
      [&](const ParameterPoint& p) { return metric_matrix(model, p, truncation); }, at, n,
      tol, h);
}

ClosednessReport check_closedness(const MetricField& g, const ParameterPoint& at, double tol,
                                  double step) {
  return closedness_impl(g, at, at.dim(), tol, step);
}

}  // namespace kig
