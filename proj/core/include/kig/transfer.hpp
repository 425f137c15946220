#pragma once

#include <span>
#include <vector>

#include "kig/model.hpp"

namespace kig {

// Coefficients eta_0..eta_R of log h(z), where h is the transfer function
//   h(z) = (1 - z)^d * prod_i (1 - mu_i z) / prod_j (1 - lambda_j z)
// for the rational families; generic models supply eta directly.
struct LogTransferSeries {
  int truncation = 0;
  std::vector<Complex> eta;  // size truncation + 1
};

// Impulse response h_0..h_R (power series coefficients of h).
struct ImpulseSeries {
  int truncation = 0;
  std::vector<Complex> h;
};

struct PotentialReport {
  double value = 0.0;
  // Bound on the discarded tail.  Zero when the value is exact (closed form
  // or a series that terminates below the truncation order).
  double tail_bound = 0.0;
};

struct KahlerReport {
  bool kahler = true;
  double max_deviation = 0.0;  // of eta_0 across the sample points
  Complex eta0_reference{0.0, 0.0};
  double tolerance = 0.0;
  int samples = 0;
};

LogTransferSeries log_coefficients(const FilterModel& model, const ParameterPoint& at,
                                   int truncation = kDefaultTruncation);

ImpulseSeries impulse_response(const FilterModel& model, const ParameterPoint& at,
                               int truncation = kDefaultTruncation);

// The potential sum_{k>=1} |eta_k|^2.  Rational families use the closed form
// built from dilogarithms (exact up to rounding); generic models truncate at
// the given order and report a tail bound that assumes the log transfer
// coefficients decay at least geometrically at rate 1 - margin.
double kahler_potential(const FilterModel& model, const ParameterPoint& at,
                        int truncation = kDefaultTruncation);
PotentialReport kahler_potential_report(const FilterModel& model, const ParameterPoint& at,
                                        int truncation = kDefaultTruncation);
// Plain truncated partial sum (no closed form, no tail), any model kind.
double kahler_potential_truncated(const FilterModel& model, const ParameterPoint& at,
                                  int truncation);

// The |d| + p + q envelope bound on the potential for rational families.
double potential_bound(const FilterModel& model, const ParameterPoint& at);

// A family admits the whole geometric construction iff the constant term of
// the log transfer function does not vary with the parameter.  This probes
// eta_0 at the given points and reports the largest deviation.
KahlerReport check_kahler_condition(const FilterModel& model,
                                    std::span<const ParameterPoint> points,
                                    double tol = kKahlerTol);

}  // namespace kig
