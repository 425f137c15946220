#include "kig/metric.hpp"

#include <cmath>
#include <sstream>

#include "kig/errors.hpp"

namespace kig {
namespace {

// log(1 - x) / x, series for small |x| to avoid cancellation; L(0) = -1.
Complex log1m_over(Complex x) {
  if (std::abs(x) < 0.25) {
    Complex term(1.0);
    Complex acc(0.0);
    for (int k = 1; k <= 40; ++k) {
      const Complex add = term / static_cast<double>(k);
      acc += add;
      if (std::abs(add) < 1e-18 * (1.0 + std::abs(acc))) break;
      term *= x;
    }
    return -acc;
  }
  return std::log(Complex(1.0) - x) / x;
}

HermitianMetric finalize(const char* label, const ParameterPoint& at, Eigen::MatrixXcd g) {
  HermitianMetric m;
  m.point = at;
  const int n = static_cast<int>(g.rows());
  if (n == 0) {
    m.g.resize(0, 0);
    m.g_inv.resize(0, 0);
    return m;
  }
  m.hermiticity_error = (g - g.adjoint().eval()).cwiseAbs().maxCoeff();
  if (m.hermiticity_error > kHermitianTol) {
    std::ostringstream os;
    os << label << ": asymmetry " << m.hermiticity_error << " exceeds " << kHermitianTol;
    throw NumericalError(os.str());
  }
  m.g = 0.5 * (g + g.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.g, Eigen::EigenvaluesOnly);
  m.min_eigenvalue = es.eigenvalues().minCoeff();
  if (!(m.min_eigenvalue > 0.0)) {
    std::ostringstream os;
    os << label << ": metric not positive definite (min eigenvalue " << m.min_eigenvalue
       << ")";
    throw NumericalError(os.str());
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m.g);
  m.det = lu.determinant().real();
  m.log_abs_det = 0.0;
  for (int i = 0; i < n; ++i) m.log_abs_det += std::log(std::abs(lu.matrixLU()(i, i)));
  m.g_inv = lu.inverse();
  m.inverse_residual =
      (m.g * m.g_inv - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (m.inverse_residual > kInverseResidualTol) {
    std::ostringstream os;
    os << label << ": inverse residual " << m.inverse_residual << " exceeds "
       << kInverseResidualTol << " (near-degenerate parameter point)";
    throw NumericalError(os.str());
  }
  return m;
}

Eigen::MatrixXcd generic_series_matrix(const FilterModel& model, const ParameterPoint& at,
                                       int truncation) {
  // Jacobian of (eta_1..eta_R) by central differences; eta_0 must not move.
  const int n = model.dim();
  const std::size_t len = static_cast<std::size_t>(truncation) + 1;
  auto eval = [&](const ParameterPoint& p) {
    std::vector<Complex> eta = model.source()(p, truncation);
    eta.resize(len, Complex(0.0));
    return eta;
  };
  const double h =
      fd_step([&](const ParameterPoint& p, double r) { return model.in_domain(p, r); }, at,
              kFdStepSecond, 1);
  const std::vector<Complex> eta_center = eval(at);
  std::vector<Eigen::VectorXcd> jac(len, Eigen::VectorXcd::Zero(n));
  double eta0_dev = 0.0;
  for (int i = 0; i < n; ++i) {
    ParameterPoint pr1 = at, pr2 = at, pi1 = at, pi2 = at;
    pr1.coords[i] += h;
    pr2.coords[i] -= h;
    pi1.coords[i] += Complex(0.0, h);
    pi2.coords[i] -= Complex(0.0, h);
    const auto er1 = eval(pr1), er2 = eval(pr2), ei1 = eval(pi1), ei2 = eval(pi2);
    for (const auto* e : {&er1, &er2, &ei1, &ei2})
      eta0_dev = std::max(eta0_dev, std::abs((*e)[0] - eta_center[0]));
    for (std::size_t k = 1; k < len; ++k) {
      const Complex dre = (er1[k] - er2[k]) / (2.0 * h);
      const Complex dim = (ei1[k] - ei2[k]) / (2.0 * h);
      jac[k](i) = 0.5 * (dre - Complex(0.0, 1.0) * dim);
    }
  }
  if (eta0_dev > kKahlerTol) {
    std::ostringstream os;
    os << "model '" << model.label()
       << "' is not Kahler: the constant log transfer coefficient varies with the "
          "parameter (deviation "
       << eta0_dev << " across probe points)";
    throw NotKahlerError(os.str());
  }
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t k = 1; k < len; ++k) g += jac[k] * jac[k].adjoint();
  return g;
}

}  // namespace

double inverse_square_tail(int truncation) {
  if (truncation < 0) throw ValidationError("inverse_square_tail: negative truncation");
  // Explicit sum for k = R+1 .. R+1000 (backwards, small terms first), then
  // the asymptotic remainder sum_{k>x} 1/k^2 = 1/x - ... at x = R + 1000
  // written through the 1/x^5 term; its error is far below double rounding.
  const double x = static_cast<double>(truncation) + 1000.0;
  const double z = x + 1.0;
  double rem = 1.0 / z + 1.0 / (2.0 * z * z) + 1.0 / (6.0 * z * z * z) -
               1.0 / (30.0 * z * z * z * z * z);
  double acc = 0.0;
  for (int k = truncation + 1000; k > truncation; --k)
    acc += 1.0 / (static_cast<double>(k) * static_cast<double>(k));
  return acc + rem;
}

HermitianMetric metric_series(const FilterModel& model, const ParameterPoint& at,
                              int truncation) {
  if (truncation < 1) throw ValidationError("metric_series: truncation must be >= 1");
  model.require_in_domain(at);
  if (model.kind() == ModelKind::GenericSeries)
    return finalize("metric_series", at, generic_series_matrix(model, at, truncation));

  const int n = model.dim();
  const int off = model.has_d() ? 1 : 0;
  const auto poles = model.poles_of(at);
  const auto zeros = model.zeros_of(at);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  // Per-term derivatives: d eta_k/dd = -1/k, d/d lambda_a = lambda_a^{k-1},
  // d/d mu_b = -mu_b^{k-1}.
  Eigen::VectorXcd v(n);
  std::vector<Complex> lp(poles.size(), Complex(1.0)), mp(zeros.size(), Complex(1.0));
  for (int k = 1; k <= truncation; ++k) {
    if (model.has_d()) v(0) = Complex(-1.0 / k);
    for (std::size_t a = 0; a < lp.size(); ++a) v(off + static_cast<int>(a)) = lp[a];
    for (std::size_t b = 0; b < mp.size(); ++b)
      v(off + static_cast<int>(poles.size() + b)) = -mp[b];
    g += v * v.adjoint();
    for (std::size_t a = 0; a < lp.size(); ++a) lp[a] *= poles[a];
    for (std::size_t b = 0; b < mp.size(); ++b) mp[b] *= zeros[b];
  }
  if (model.has_d()) g(0, 0) += inverse_square_tail(truncation);
  return finalize("metric_series", at, g);
}

HermitianMetric metric_closed_form(const FilterModel& model, const ParameterPoint& at) {
  if (model.kind() == ModelKind::GenericSeries)
    throw ValidationError("metric_closed_form: only defined for rational families");
  model.require_in_domain(at);
  const int n = model.dim();
  const int off = model.has_d() ? 1 : 0;
  const int p = model.num_poles(), q = model.num_zeros();
  const auto poles = model.poles_of(at);
  const auto zeros = model.zeros_of(at);
  Eigen::MatrixXcd g(n, n);
  if (model.has_d()) {
    g(0, 0) = kPiSqOver6;
    for (int a = 0; a < p; ++a) {
      g(0, off + a) = log1m_over(std::conj(poles[a]));
      g(off + a, 0) = std::conj(g(0, off + a));
    }
    for (int b = 0; b < q; ++b) {
      g(0, off + p + b) = -log1m_over(std::conj(zeros[b]));
      g(off + p + b, 0) = std::conj(g(0, off + p + b));
    }
  }
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      g(off + a, off + b) = Complex(1.0) / (Complex(1.0) - poles[a] * std::conj(poles[b]));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      g(off + p + a, off + p + b) =
          Complex(1.0) / (Complex(1.0) - zeros[a] * std::conj(zeros[b]));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) {
      g(off + a, off + p + b) =
          Complex(-1.0) / (Complex(1.0) - poles[a] * std::conj(zeros[b]));
      g(off + p + b, off + a) = std::conj(g(off + a, off + p + b));
    }
  return finalize("metric_closed_form", at, g);
}

HermitianMetric metric_from_potential(const ScalarField& potential, const ParameterPoint& at) {
  return finalize("metric_from_potential", at, mixed_hessian(potential, at));
}

HermitianMetric metric(const FilterModel& model, const ParameterPoint& at, int truncation) {
  if (model.kind() == ModelKind::GenericSeries) return metric_series(model, at, truncation);
  return metric_closed_form(model, at);
}

Eigen::MatrixXd real_metric(const HermitianMetric& m) {
  const int n = m.n();
  Eigen::MatrixXd G(2 * n, 2 * n);
  const Eigen::MatrixXd A = m.g.real();
  const Eigen::MatrixXd B = m.g.imag();
  G.topLeftCorner(n, n) = A;
  G.topRightCorner(n, n) = B;
  G.bottomLeftCorner(n, n) = -B;
  G.bottomRightCorner(n, n) = A;
  return 2.0 * G;
}

double log_abs_det(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  double acc = 0.0;
  for (int i = 0; i < m.rows(); ++i) acc += std::log(std::abs(lu.matrixLU()(i, i)));
  return acc;
}

}  // namespace kig
