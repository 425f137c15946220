#include "kig/wirtinger.hpp"

#include <array>
#include <cmath>
#include <span>

#include "kig/errors.hpp"

namespace kig {
namespace {

ParameterPoint displaced(const ParameterPoint& p, int axis, double delta) {
  const int n = p.dim();
  ParameterPoint q = p;
  if (axis < n)
    q.coords[static_cast<std::size_t>(axis)] += delta;
  else
    q.coords[static_cast<std::size_t>(axis - n)] += Complex(0.0, delta);
  return q;
}

// Recursive central difference along the listed axes, common step h.
double central(const std::function<double(const ParameterPoint&)>& f,
               const ParameterPoint& p, std::span<const int> axes, double h) {
  if (axes.empty()) return f(p);
  const auto rest = axes.subspan(1);
  return (central(f, displaced(p, axes[0], +h), rest, h) -
          central(f, displaced(p, axes[0], -h), rest, h)) /
         (2.0 * h);
}

double coordinate_scale(const ParameterPoint& p) {
  double s = 1.0;
  for (const Complex& c : p.coords) s = std::max(s, std::abs(c));
  return s;
}

}  // namespace

ScalarField domain_field(const FilterModel& model,
                         std::function<double(const ParameterPoint&)> eval) {
  ScalarField f;
  f.eval = std::move(eval);
  f.box_ok = [model](const ParameterPoint& p, double r) { return model.in_domain(p, r); };
  return f;
}

double fd_step(const std::function<bool(const ParameterPoint&, double)>& box_ok,
               const ParameterPoint& at, double base_step, int order) {
  double h = base_step * coordinate_scale(at);
  if (!box_ok) return h;
  for (int k = 0; k <= kFdMaxHalvings; ++k, h *= 0.5)
    if (box_ok(at, order * h)) return h;
  throw NumericalError(
      "finite differences: stencil cannot fit inside the admissible domain "
      "after the maximum number of step reductions");
}

Eigen::MatrixXcd mixed_hessian(const ScalarField& f, const ParameterPoint& at) {
  const int n = at.dim();
  const double h = fd_step(f.box_ok, at, f.step_second, 2);
  Eigen::MatrixXcd H(n, n);
  for (int i = 0; i < n; ++i) {
    {
      // Diagonal: (f_xx + f_yy) / 4; the cross terms cancel exactly.
      const std::array<int, 2> re = {i, i}, im = {i + n, i + n};
      H(i, i) = 0.25 * (central(f.eval, at, re, h) + central(f.eval, at, im, h));
    }
    for (int j = i + 1; j < n; ++j) {
      Complex acc(0.0);
      for (int si = 0; si < 2; ++si)
        for (int sj = 0; sj < 2; ++sj) {
          const Complex coeff = (si ? Complex(0.0, -1.0) : Complex(1.0)) *
                                (sj ? Complex(0.0, +1.0) : Complex(1.0));
          const std::array<int, 2> axes = {i + si * n, j + sj * n};
          acc += coeff * central(f.eval, at, axes, h);
        }
      H(i, j) = 0.25 * acc;
      H(j, i) = std::conj(H(i, j));
    }
  }
  return H;
}

Complex mixed_third(const ScalarField& f, const ParameterPoint& at, int i, int j, int k) {
  const int n = at.dim();
  const double h = fd_step(f.box_ok, at, f.step_third, 3);
  Complex acc(0.0);
  for (int si = 0; si < 2; ++si)
    for (int sj = 0; sj < 2; ++sj)
      for (int sk = 0; sk < 2; ++sk) {
        const Complex coeff = (si ? Complex(0.0, -1.0) : Complex(1.0)) *
                              (sj ? Complex(0.0, -1.0) : Complex(1.0)) *
                              (sk ? Complex(0.0, +1.0) : Complex(1.0));
        const std::array<int, 3> axes = {i + si * n, j + sj * n, k + sk * n};
        acc += coeff * central(f.eval, at, axes, h);
      }
  return 0.125 * acc;
}

Eigen::VectorXd real_gradient(const ScalarField& f, const ParameterPoint& at) {
  const int n = at.dim();
  const double h = fd_step(f.box_ok, at, f.step_second, 1);
  Eigen::VectorXd g(2 * n);
  for (int a = 0; a < 2 * n; ++a) {
    const std::array<int, 1> axes = {a};
    g(a) = central(f.eval, at, axes, h);
  }
  return g;
}

}  // namespace kig
