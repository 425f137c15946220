#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is naive on purpose (schoolbook algorithms, nested real
// central differences) and avoids the code paths under test.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "kig/metric.hpp"
#include "kig/model.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Series = std::vector<Complex>;

// Truncated Cauchy product, order = max of the operand orders.
inline Series mul(const Series& a, const Series& b) {
  const std::size_t order = std::max(a.size(), b.size()) - 1;
  Series c(order + 1, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Schoolbook long division num/den to the given order (den[0] != 0).
inline Series div(const Series& num, const Series& den, std::size_t order) {
  Series q(order + 1, Complex(0.0));
  Series rem = num;
  rem.resize(order + 1, Complex(0.0));
  for (std::size_t k = 0; k <= order; ++k) {
    q[k] = rem[k] / den[0];
    for (std::size_t j = 0; j < den.size() && k + j <= order; ++j)
      rem[k + j] -= q[k] * den[j];
  }
  return q;
}

// exp by the Taylor sum over powers of g - g0, scaled by e^{g0}.
inline Series exp_taylor(const Series& g, std::size_t order) {
  Series h = g;
  h.resize(order + 1, Complex(0.0));
  const Complex g0 = h[0];
  h[0] = Complex(0.0);
  Series acc(order + 1, Complex(0.0));
  acc[0] = Complex(1.0);
  Series power(order + 1, Complex(0.0));
  power[0] = Complex(1.0);
  double factorial = 1.0;
  for (std::size_t m = 1; m <= order; ++m) {
    power = mul(power, h);
    power.resize(order + 1, Complex(0.0));
    factorial *= static_cast<double>(m);
    for (std::size_t k = 0; k <= order; ++k) acc[k] += power[k] / factorial;
  }
  const Complex scale = std::exp(g0);
  for (Complex& c : acc) c *= scale;
  return acc;
}

// log by integrating f'/f (uses the long-division oracle, not the library).
inline Series log_series(const Series& f, std::size_t order) {
  Series fp(order + 1, Complex(0.0));
  for (std::size_t k = 0; k + 1 < f.size() && k <= order; ++k)
    fp[k] = static_cast<double>(k + 1) * f[k + 1];
  const Series q = div(fp, f, order);
  Series l(order + 1, Complex(0.0));
  l[0] = std::log(f[0]);
  for (std::size_t k = 1; k <= order; ++k) l[k] = q[k - 1] / static_cast<double>(k);
  return l;
}

// Axis convention shared with the library: axis a < n shifts the real part of
// coordinate a, axis n + a the imaginary part.
inline kig::ParameterPoint shifted(const kig::ParameterPoint& p, int axis, double delta) {
  kig::ParameterPoint q = p;
  const int n = p.dim();
  if (axis < n)
    q.coords[static_cast<std::size_t>(axis)] += Complex(delta, 0.0);
  else
    q.coords[static_cast<std::size_t>(axis - n)] += Complex(0.0, delta);
  return q;
}

// Divergence-form Laplace-Beltrami on the underlying real 2n-manifold,
//   (1/sqrt|G|) d_a ( sqrt|G| G^{ab} d_b f ),
// with nested central differences.  The volume factor and the first-order
// terms it generates are never formed by the library's Wirtinger route, so
// agreement here pins the operator itself, not just the Hessian.
inline double divergence_laplacian(const kig::FilterModel& model,
                                   const std::function<double(const kig::ParameterPoint&)>& f,
                                   const kig::ParameterPoint& at, double h_outer = 1e-3,
                                   double h_inner = 1e-5) {
  const int m = 2 * at.dim();
  auto grad = [&](const kig::ParameterPoint& p) {
    Eigen::VectorXd v(m);
    for (int a = 0; a < m; ++a)
      v(a) = (f(shifted(p, a, h_inner)) - f(shifted(p, a, -h_inner))) / (2.0 * h_inner);
    return v;
  };
  auto flux = [&](const kig::ParameterPoint& p, int a) {
    const Eigen::MatrixXd G = kig::real_metric(kig::metric(model, p));
    const double vol = std::sqrt(G.determinant());
    const Eigen::VectorXd up = G.llt().solve(grad(p));
    return vol * up(a);
  };
  const Eigen::MatrixXd G0 = kig::real_metric(kig::metric(model, at));
  const double vol0 = std::sqrt(G0.determinant());
  double acc = 0.0;
  for (int a = 0; a < m; ++a)
    acc += (flux(shifted(at, a, h_outer), a) - flux(shifted(at, a, -h_outer), a)) /
           (2.0 * h_outer);
  return acc / vol0;
}

// Scalar curvature of a 2-real-dimensional metric by the textbook chain
// Christoffel -> Riemann -> Ricci -> scalar, nested central differences.
// Convention: R^r_{smn} = d_m Gam^r_{ns} - d_n Gam^r_{ms}
//                         + Gam^r_{ml} Gam^l_{ns} - Gam^r_{nl} Gam^l_{ms},
// Ric_{sn} = R^r_{srn}, scal = G^{sn} Ric_{sn} (positive on the round sphere).
inline double scalar_curvature_2d(const std::function<Eigen::Matrix2d(double, double)>& G,
                                  double x, double y, double h_outer = 1e-3,
                                  double h_inner = 1e-5) {
  using Gamma = std::array<Eigen::Matrix2d, 2>;  // Gamma[a](b, c)
  auto christoffel = [&](double u, double v) {
    std::array<Eigen::Matrix2d, 2> dG;
    dG[0] = (G(u + h_inner, v) - G(u - h_inner, v)) / (2.0 * h_inner);
    dG[1] = (G(u, v + h_inner) - G(u, v - h_inner)) / (2.0 * h_inner);
    const Eigen::Matrix2d Gi = G(u, v).inverse();
    Gamma gm;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          double s = 0.0;
          for (int e = 0; e < 2; ++e) s += Gi(a, e) * (dG[b](e, c) + dG[c](e, b) - dG[e](b, c));
          gm[static_cast<std::size_t>(a)](b, c) = 0.5 * s;
        }
    return gm;
  };
  const Gamma g0 = christoffel(x, y);
  std::array<Gamma, 2> dg;  // dg[m][a](b, c) = d_m Gamma^a_{bc}
  for (int m = 0; m < 2; ++m) {
    const double du = m == 0 ? h_outer : 0.0;
    const double dv = m == 0 ? 0.0 : h_outer;
    const Gamma plus = christoffel(x + du, y + dv);
    const Gamma minus = christoffel(x - du, y - dv);
    for (int a = 0; a < 2; ++a)
      dg[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)] =
          (plus[static_cast<std::size_t>(a)] - minus[static_cast<std::size_t>(a)]) /
          (2.0 * h_outer);
  }
  auto riemann = [&](int r, int s, int m, int n) {
    double acc = dg[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)](n, s) -
                 dg[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)](m, s);
    for (int l = 0; l < 2; ++l)
      acc += g0[static_cast<std::size_t>(r)](m, l) * g0[static_cast<std::size_t>(l)](n, s) -
             g0[static_cast<std::size_t>(r)](n, l) * g0[static_cast<std::size_t>(l)](m, s);
    return acc;
  };
  const Eigen::Matrix2d Gi = G(x, y).inverse();
  double scal = 0.0;
  for (int s = 0; s < 2; ++s)
    for (int n = 0; n < 2; ++n) {
      double ric = 0.0;
      for (int r = 0; r < 2; ++r) ric += riemann(r, s, r, n);
      scal += Gi(s, n) * ric;
    }
  return scal;
}

// Uniform admissible point: Re d uniform in (-d_bound, d_bound), poles and
// zeros uniform in the disk of radius r_bound, pairwise separation enforced
// by rejection.
inline kig::ParameterPoint sample_point(const kig::FilterModel& model, std::mt19937_64& rng,
                                        double r_bound, double d_bound = 0.45,
                                        double min_sep = 0.02) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    kig::ParameterPoint pt;
    pt.coords.reserve(static_cast<std::size_t>(model.dim()));
    if (model.has_d()) pt.coords.emplace_back(d_bound * u(rng), 0.0);
    const int k = model.num_poles() + model.num_zeros();
    for (int i = 0; i < k; ++i) {
      double re, im;
      do {
        re = u(rng);
        im = u(rng);
      } while (re * re + im * im > 1.0);
      pt.coords.emplace_back(r_bound * re, r_bound * im);
    }
    bool ok = model.in_domain(pt);
    const std::size_t off = model.has_d() ? 1 : 0;
    for (std::size_t i = off; ok && i < pt.coords.size(); ++i)
      for (std::size_t j = i + 1; ok && j < pt.coords.size(); ++j)
        if (std::abs(pt.coords[i] - pt.coords[j]) < min_sep) ok = false;
    if (ok) return pt;
  }
  throw std::runtime_error("sample_point: rejection sampling failed");
}

}  // namespace oracle
