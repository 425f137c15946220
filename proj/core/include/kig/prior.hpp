#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kig/metric.hpp"
#include "kig/model.hpp"
#include "kig/wirtinger.hpp"

namespace kig {

// Shrinkage priors have the form psi(xi) = Psi(u* - kappa(xi)) with an
// increasing concave Psi and a subharmonic seed kappa bounded by u*.  The
// Exp family (convex) is deliberately available as a diagnostic candidate
// for scans; validate_prior_spec refuses it as an actual prior.
enum class PsiFamily { Power, LogPower, Exp };

enum class KappaKind { Potential, ImpulseWeighted, CoordinateQuadratic };

struct PriorSpec {
  PsiFamily family = PsiFamily::Power;
  double a = 0.5;  // exponent in (0, 1]
  KappaKind kappa = KappaKind::Potential;
  // ImpulseWeighted: nonnegative weights on |h_r|^2, r = 0.. (at least one
  // positive).  CoordinateQuadratic: one nonnegative weight per coordinate.
  std::vector<double> weights;
  int truncation = kDefaultTruncation;
  std::optional<double> u_star;  // defaulted for Arfima when absent
};

// (1/2 + p + q)^2 pi^2/6: a global bound on the potential of an Arfima
// family.  Other kinds must supply u* explicitly.
double default_u_star(const FilterModel& model);
double resolve_u_star(const PriorSpec& spec, const FilterModel& model);

// Static validation (family, exponent, weights, u*).  Throws ValidationError.
void validate_prior_spec(const PriorSpec& spec, const FilterModel& model);

double kappa_value(const PriorSpec& spec, const FilterModel& model, const ParameterPoint& at);
// tau = u* - kappa; may be <= 0 (then psi is undefined there).
double tau_value(const PriorSpec& spec, const FilterModel& model, const ParameterPoint& at);
double psi_from_tau(const PriorSpec& spec, double tau);  // requires tau > 0
// Throws ValidationError when kappa reaches the bound u* at the point.
double psi_value(const PriorSpec& spec, const FilterModel& model, const ParameterPoint& at);

ScalarField kappa_field(const PriorSpec& spec, const FilterModel& model);
ScalarField psi_field(const PriorSpec& spec, const FilterModel& model);

// Jeffreys density (unnormalized): det g.
double jeffreys_density(const FilterModel& model, const ParameterPoint& at,
                        int truncation = kDefaultTruncation);

struct ScanRow {
  ParameterPoint point;
  double kappa = 0.0;
  double value = 0.0;  // psi (superharmonic scan) or kappa (subharmonic scan)
  double lap = 0.0;    // Laplace-Beltrami of `value`
};

struct ScanReport {
  std::size_t grid_size = 0;
  double tolerance = 0.0;
  std::size_t violations = 0;
  bool passed = true;
  double max_lap = 0.0;
  double min_lap = 0.0;
  ParameterPoint argmax_lap;
  double sup_kappa = 0.0;
  ParameterPoint argmax_kappa;
  std::vector<ScanRow> rows;  // populated when keep_rows

  // Within tolerance of Laplacian zero everywhere.
  bool harmonic() const {
    return max_lap <= tolerance && min_lap >= -tolerance;
  }
};

// Verifies Delta psi <= tol at every grid point.
ScanReport superharmonic_scan(const PriorSpec& spec, const FilterModel& model,
                              std::span<const ParameterPoint> grid,
                              double tol = kSuperharmonicTol, bool keep_rows = false);
// Verifies Delta kappa >= -tol at every grid point and reports sup kappa.
ScanReport subharmonic_check(const PriorSpec& spec, const FilterModel& model,
                             std::span<const ParameterPoint> grid,
                             double tol = kSuperharmonicTol, bool keep_rows = false);

// Field-level variants for custom candidates (value = the field whose
// Laplacian is bounded; kappa = the seed reported alongside).
ScanReport superharmonic_scan_field(const ScalarField& value, const ScalarField& kappa,
                                    const FilterModel& model,
                                    std::span<const ParameterPoint> grid, double tol,
                                    bool keep_rows = false, int truncation = kDefaultTruncation);
ScanReport subharmonic_check_field(const ScalarField& kappa, const FilterModel& model,
                                   std::span<const ParameterPoint> grid, double tol,
                                   bool keep_rows = false, int truncation = kDefaultTruncation);

// u* must exceed the scanned supremum of kappa with a safety margin.
void validate_u_star(const PriorSpec& spec, const FilterModel& model,
                     const ScanReport& kappa_scan);

// A Power prior with a = 1 on a harmonic seed is itself harmonic: no strict
// superharmonicity, hence no risk improvement.  Refuse the combination.
void validate_psi_for_kappa_class(const PriorSpec& spec, const ScanReport& kappa_scan);

// Leading-order risk improvement over the Jeffreys prior for N observations:
//   [ <grad log psi, grad log psi> / 2 - (Delta psi) / psi ] / N^2.
// Nonnegative for every valid spec (superharmonic psi).
double risk_improvement_leading_order(const PriorSpec& spec, const FilterModel& model,
                                      const ParameterPoint& at, int n_obs);

}  // namespace kig
