#include "kig/transfer.hpp"

#include <cmath>
#include <sstream>

#include "kig/dilog.hpp"
#include "kig/errors.hpp"
#include "kig/fps.hpp"

namespace kig {
namespace {

std::vector<Complex> generic_eta(const FilterModel& model, const ParameterPoint& at,
                                 int truncation) {
  std::vector<Complex> eta = model.source()(at, truncation);
  eta.resize(static_cast<std::size_t>(truncation) + 1, Complex(0.0));
  return eta;
}

}  // namespace

LogTransferSeries log_coefficients(const FilterModel& model, const ParameterPoint& at,
                                   int truncation) {
  if (truncation < 0) throw ValidationError("log_coefficients: negative truncation");
  model.require_in_domain(at);
  LogTransferSeries out;
  out.truncation = truncation;
  if (model.kind() == ModelKind::GenericSeries) {
    out.eta = generic_eta(model, at, truncation);
    return out;
  }
  // eta_k = -(d + sum_i mu_i^k - sum_j lambda_j^k) / k, eta_0 = 0.
  const Complex d = model.d_of(at);
  const auto poles = model.poles_of(at);
  const auto zeros = model.zeros_of(at);
  out.eta.assign(static_cast<std::size_t>(truncation) + 1, Complex(0.0));
  std::vector<Complex> lp(poles.begin(), poles.end());
  std::vector<Complex> mp(zeros.begin(), zeros.end());
  for (int k = 1; k <= truncation; ++k) {
    Complex acc = d;
    for (auto& m : mp) acc += m;
    for (auto& l : lp) acc -= l;
    out.eta[static_cast<std::size_t>(k)] = -acc / static_cast<double>(k);
    if (k < truncation) {
      for (std::size_t i = 0; i < lp.size(); ++i) lp[i] *= poles[i];
      for (std::size_t i = 0; i < mp.size(); ++i) mp[i] *= zeros[i];
    }
  }
  return out;
}

ImpulseSeries impulse_response(const FilterModel& model, const ParameterPoint& at,
                               int truncation) {
  if (truncation < 0) throw ValidationError("impulse_response: negative truncation");
  model.require_in_domain(at);
  ImpulseSeries out;
  out.truncation = truncation;
  if (model.kind() == ModelKind::GenericSeries) {
    out.h = fps::exp(generic_eta(model, at, truncation));
    return out;
  }
  // Rational families: exact product (1-z)^d * prod(1 - mu z) / prod(1 - lambda z).
  fps::Series h = fps::binomial_one_minus(model.d_of(at), truncation);
  for (const Complex& mu : model.zeros_of(at)) {
    fps::Series f(static_cast<std::size_t>(truncation) + 1, Complex(0.0));
    f[0] = Complex(1.0);
    if (truncation >= 1) f[1] = -mu;
    h = fps::mul(h, f);
  }
  for (const Complex& lambda : model.poles_of(at)) {
    fps::Series f(static_cast<std::size_t>(truncation) + 1, Complex(0.0));
    f[0] = Complex(1.0);
    if (truncation >= 1) f[1] = -lambda;
    h = fps::div(h, f);
  }
  out.h = std::move(h);
  return out;
}

double kahler_potential_truncated(const FilterModel& model, const ParameterPoint& at,
                                  int truncation) {
  const LogTransferSeries s = log_coefficients(model, at, truncation);
  double acc = 0.0;
  for (int k = truncation; k >= 1; --k) acc += std::norm(s.eta[static_cast<std::size_t>(k)]);
  return acc;
}

PotentialReport kahler_potential_report(const FilterModel& model, const ParameterPoint& at,
                                        int truncation) {
  model.require_in_domain(at);
  PotentialReport rep;
  if (model.kind() == ModelKind::GenericSeries) {
    if (truncation < 1)
      throw ValidationError("kahler_potential: generic models need truncation >= 1");
    rep.value = kahler_potential_truncated(model, at, truncation);
    const LogTransferSeries s = log_coefficients(model, at, truncation);
    // Geometric-decay tail bound at rate rho = 1 - margin, anchored at the
    // last retained coefficient: sum_{k>R} |eta_R|^2 rho^{2(k-R)}.
    const double rho2 = (1.0 - model.domain_margin()) * (1.0 - model.domain_margin());
    const double last = std::norm(s.eta.back());
    rep.tail_bound = last * rho2 / (1.0 - rho2);
    return rep;
  }
  // Closed form.  Writing S(x) = sum_i Li2(x mu_i) - sum_j Li2(x lambda_j):
  //   K = |d|^2 pi^2/6 + d conj(S(1)) + conj(d) S(1)
  //     + sum_{ab} Li2(l_a conj(l_b)) + sum_{ab} Li2(m_a conj(m_b))
  //     - sum_{ab} Li2(l_a conj(m_b)) - sum_{ab} Li2(m_a conj(l_b)).
  const Complex d = model.d_of(at);
  const auto poles = model.poles_of(at);
  const auto zeros = model.zeros_of(at);
  Complex acc = std::norm(d) * kPiSqOver6;
  if (d != Complex(0.0)) {
    Complex s1(0.0);
    for (const Complex& mu : zeros) s1 += dilog(mu);
    for (const Complex& la : poles) s1 -= dilog(la);
    acc += d * std::conj(s1) + std::conj(d) * s1;
  }
  for (const Complex& a : poles)
    for (const Complex& b : poles) acc += dilog(a * std::conj(b));
  for (const Complex& a : zeros)
    for (const Complex& b : zeros) acc += dilog(a * std::conj(b));
  for (const Complex& a : poles)
    for (const Complex& b : zeros) acc -= dilog(a * std::conj(b));
  for (const Complex& a : zeros)
    for (const Complex& b : poles) acc -= dilog(a * std::conj(b));
  rep.value = acc.real();
  rep.tail_bound = 0.0;
  return rep;
}

double kahler_potential(const FilterModel& model, const ParameterPoint& at, int truncation) {
  return kahler_potential_report(model, at, truncation).value;
}

double potential_bound(const FilterModel& model, const ParameterPoint& at) {
  if (model.kind() == ModelKind::GenericSeries)
    throw ValidationError("potential_bound: only defined for rational families");
  const double s =
      std::abs(model.d_of(at)) + model.num_poles() + model.num_zeros();
  return s * s * kPiSqOver6;
}

KahlerReport check_kahler_condition(const FilterModel& model,
                                    std::span<const ParameterPoint> points, double tol) {
  if (points.empty())
    throw ValidationError("check_kahler_condition: need at least one sample point");
  if (model.kind() == ModelKind::GenericSeries && points.size() < 2)
    throw ValidationError(
        "check_kahler_condition: generic models need at least two sample points");
  KahlerReport rep;
  rep.tolerance = tol;
  rep.samples = static_cast<int>(points.size());
  // eta_0 at each sample; a short series is enough.
  const int probe_order = 1;
  bool first = true;
  for (const ParameterPoint& pt : points) {
    const LogTransferSeries s = log_coefficients(model, pt, probe_order);
    if (first) {
      rep.eta0_reference = s.eta[0];
      first = false;
    }
    rep.max_deviation = std::max(rep.max_deviation, std::abs(s.eta[0] - rep.eta0_reference));
  }
  rep.kahler = rep.max_deviation <= tol;
  return rep;
}

}  // namespace kig
