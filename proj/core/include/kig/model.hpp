#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kig/constants.hpp"

namespace kig {

using Complex = std::complex<double>;

// A point in the (complexified) parameter space of a model.
struct ParameterPoint {
  std::vector<Complex> coords;

  ParameterPoint() = default;
  explicit ParameterPoint(std::vector<Complex> c) : coords(std::move(c)) {}
  int dim() const { return static_cast<int>(coords.size()); }
};

enum class ModelKind { Arfima, RationalArma, GenericSeries };

// Generic models supply the log transfer coefficients eta_0..eta_R directly
// as a function of the parameter point and the truncation order.
using SeriesSource =
    std::function<std::vector<Complex>(const ParameterPoint&, int)>;

// A parametric family of stationary minimum-phase linear filters.
//
// Coordinate layout of a ParameterPoint:
//   Arfima        [d, lambda_1..lambda_p, mu_1..mu_q]
//   RationalArma  [lambda_1..lambda_p, mu_1..mu_q]
//   GenericSeries [xi_1..xi_n]
// lambda are transfer-function poles, mu are zeros; both must stay inside the
// disk of radius 1 - margin.  d is the fractional-differencing exponent with
// Re d in (-1/2, 1/2); its imaginary part is deliberately unconstrained so
// that holomorphic finite-difference probes remain admissible.
class FilterModel {
 public:
  static FilterModel arfima(Complex d, std::vector<Complex> poles,
                            std::vector<Complex> zeros,
                            double margin = kDomainMargin);
  static FilterModel arma(std::vector<Complex> poles,
                          std::vector<Complex> zeros,
                          double margin = kDomainMargin);
  static FilterModel generic(int dim, SeriesSource source,
                             ParameterPoint base = {},
                             std::string label = "generic",
                             double margin = kDomainMargin);

  ModelKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  int num_poles() const { return p_; }
  int num_zeros() const { return q_; }
  bool has_d() const { return kind_ == ModelKind::Arfima; }
  // Complex dimension of the parameter manifold.
  int dim() const { return (has_d() ? 1 : 0) + p_ + q_; }
  double domain_margin() const { return margin_; }

  // The coordinates the model was constructed with (all zero for generic
  // models unless a base point was supplied).
  const ParameterPoint& base_point() const { return base_; }

  // Views into a point, following the coordinate layout above.
  Complex d_of(const ParameterPoint& pt) const;
  std::span<const Complex> poles_of(const ParameterPoint& pt) const;
  std::span<const Complex> zeros_of(const ParameterPoint& pt) const;

  // Throws ValidationError naming the offending coordinate.
  void require_in_domain(const ParameterPoint& pt) const;
  // Non-throwing variant; `shrink` tightens every bound by that amount (used
  // to ask whether a whole finite-difference stencil box stays admissible).
  bool in_domain(const ParameterPoint& pt, double shrink = 0.0) const noexcept;

  const SeriesSource& source() const { return source_; }

 private:
  FilterModel() = default;

  ModelKind kind_ = ModelKind::GenericSeries;
  std::string label_;
  int p_ = 0;
  int q_ = 0;
  double margin_ = kDomainMargin;
  ParameterPoint base_;
  SeriesSource source_;
};

}  // namespace kig
