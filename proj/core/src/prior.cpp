#include "kig/prior.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "kig/curvature.hpp"
#include "kig/errors.hpp"
#include "kig/transfer.hpp"

namespace kig {

double default_u_star(const FilterModel& model) {
  if (model.kind() != ModelKind::Arfima)
    throw ValidationError(
        "default_u_star: only Arfima families have a built-in bound; supply u_star");
  const double s = 0.5 + model.num_poles() + model.num_zeros();
  return s * s * kPiSqOver6;
}

double resolve_u_star(const PriorSpec& spec, const FilterModel& model) {
  if (spec.u_star) {
    if (!(*spec.u_star > 0.0)) throw ValidationError("prior: u_star must be positive");
    return *spec.u_star;
  }
  return default_u_star(model);
}

void validate_prior_spec(const PriorSpec& spec, const FilterModel& model) {
  if (spec.family == PsiFamily::Exp)
    throw ValidationError(
        "prior: the Exp family is convex and only admissible as a scan diagnostic, "
        "not as a prior");
  if (!(spec.a > 0.0 && spec.a <= 1.0))
    throw ValidationError("prior: exponent a must lie in (0, 1]");
  if (spec.truncation < 1) throw ValidationError("prior: truncation must be >= 1");
  switch (spec.kappa) {
    case KappaKind::Potential:
      break;
    case KappaKind::ImpulseWeighted: {
      if (spec.weights.empty())
        throw ValidationError("prior: impulse_weighted kappa needs weights");
      bool positive = false;
      for (double w : spec.weights) {
        if (w < 0.0) throw ValidationError("prior: weights must be nonnegative");
        positive = positive || w > 0.0;
      }
      if (!positive) throw ValidationError("prior: weights must not all vanish");
      break;
    }
    case KappaKind::CoordinateQuadratic: {
      if (static_cast<int>(spec.weights.size()) != model.dim()) {
        std::ostringstream os;
        os << "prior: coordinate_quadratic needs one weight per coordinate (got "
           << spec.weights.size() << ", model has " << model.dim() << ")";
        throw ValidationError(os.str());
      }
      bool positive = false;
      for (double w : spec.weights) {
        if (w < 0.0) throw ValidationError("prior: weights must be nonnegative");
        positive = positive || w > 0.0;
      }
      if (!positive) throw ValidationError("prior: weights must not all vanish");
      break;
    }
  }
  resolve_u_star(spec, model);  // existence / positivity
}

double kappa_value(const PriorSpec& spec, const FilterModel& model, const ParameterPoint& at) {
  switch (spec.kappa) {
    case KappaKind::Potential:
      return kahler_potential(model, at, spec.truncation);
    case KappaKind::ImpulseWeighted: {
      const int order = std::min<int>(spec.truncation,
                                      static_cast<int>(spec.weights.size()) - 1);
      const ImpulseSeries s = impulse_response(model, at, order);
      double acc = 0.0;
      for (int r = 0; r <= order; ++r)
        acc += spec.weights[static_cast<std::size_t>(r)] *
               std::norm(s.h[static_cast<std::size_t>(r)]);
      return acc;
    }
    case KappaKind::CoordinateQuadratic: {
      model.require_in_domain(at);
      double acc = 0.0;
      for (int i = 0; i < at.dim(); ++i)
        acc += spec.weights[static_cast<std::size_t>(i)] *
               std::norm(at.coords[static_cast<std::size_t>(i)]);
      return acc;
    }
  }
  throw ValidationError("prior: unknown kappa kind");
}

double tau_value(const PriorSpec& spec, const FilterModel& model, const ParameterPoint& at) {
  return resolve_u_star(spec, model) - kappa_value(spec, model, at);
}

double psi_from_tau(const PriorSpec& spec, double tau) {
  if (!(tau > 0.0))
    throw ValidationError("prior: kappa reaches the bound u* (tau <= 0); "
                          "increase u_star or shrink the domain");
  switch (spec.family) {
    case PsiFamily::Power:
      return std::pow(tau, spec.a);
    case PsiFamily::LogPower:
      return std::log1p(std::pow(tau, spec.a));
    case PsiFamily::Exp:
      return std::exp(tau);
  }
  throw ValidationError("prior: unknown psi family");
}

double psi_value(const PriorSpec& spec, const FilterModel& model, const ParameterPoint& at) {
  return psi_from_tau(spec, tau_value(spec, model, at));
}

ScalarField kappa_field(const PriorSpec& spec, const FilterModel& model) {
  return domain_field(model, [spec, model](const ParameterPoint& p) {
    return kappa_value(spec, model, p);
  });
}

ScalarField psi_field(const PriorSpec& spec, const FilterModel& model) {
  return domain_field(model, [spec, model](const ParameterPoint& p) {
    return psi_value(spec, model, p);
  });
}

double jeffreys_density(const FilterModel& model, const ParameterPoint& at, int truncation) {
  return metric(model, at, truncation).det;
}

namespace {

ScanReport scan_impl(const ScalarField& value, const ScalarField& kappa,
                     const FilterModel& model, std::span<const ParameterPoint> grid,
                     double tol, bool upper, bool keep_rows, int truncation) {
  if (grid.empty()) throw ValidationError("scan: empty grid");
  ScanReport rep;
  rep.grid_size = grid.size();
  rep.tolerance = tol;
  rep.max_lap = -std::numeric_limits<double>::infinity();
  rep.min_lap = std::numeric_limits<double>::infinity();
  rep.sup_kappa = -std::numeric_limits<double>::infinity();
  if (keep_rows) rep.rows.reserve(grid.size());
  for (const ParameterPoint& pt : grid) {
    const HermitianMetric m = metric(model, pt, truncation);
    const double lap = laplace_beltrami(m, value, pt);
    const double kap = kappa.eval(pt);
    if (lap > rep.max_lap) {
      rep.max_lap = lap;
      rep.argmax_lap = pt;
    }
    rep.min_lap = std::min(rep.min_lap, lap);
    if (kap > rep.sup_kappa) {
      rep.sup_kappa = kap;
      rep.argmax_kappa = pt;
    }
    const bool violated = upper ? lap > tol : lap < -tol;
    if (violated) ++rep.violations;
    if (keep_rows) rep.rows.push_back(ScanRow{pt, kap, value.eval(pt), lap});
  }
  rep.passed = rep.violations == 0;
  return rep;
}

}  // namespace

ScanReport superharmonic_scan_field(const ScalarField& value, const ScalarField& kappa,
                                    const FilterModel& model,
                                    std::span<const ParameterPoint> grid, double tol,
                                    bool keep_rows, int truncation) {
  return scan_impl(value, kappa, model, grid, tol, /*upper=*/true, keep_rows, truncation);
}

ScanReport subharmonic_check_field(const ScalarField& kappa, const FilterModel& model,
                                   std::span<const ParameterPoint> grid, double tol,
                                   bool keep_rows, int truncation) {
  return scan_impl(kappa, kappa, model, grid, tol, /*upper=*/false, keep_rows, truncation);
}

ScanReport superharmonic_scan(const PriorSpec& spec, const FilterModel& model,
                              std::span<const ParameterPoint> grid, double tol,
                              bool keep_rows) {
  return superharmonic_scan_field(psi_field(spec, model), kappa_field(spec, model), model,
                                  grid, tol, keep_rows, spec.truncation);
}

ScanReport subharmonic_check(const PriorSpec& spec, const FilterModel& model,
                             std::span<const ParameterPoint> grid, double tol,
                             bool keep_rows) {
  return subharmonic_check_field(kappa_field(spec, model), model, grid, tol, keep_rows,
                                 spec.truncation);
}

void validate_u_star(const PriorSpec& spec, const FilterModel& model,
                     const ScanReport& kappa_scan) {
  const double u = resolve_u_star(spec, model);
  if (u < kappa_scan.sup_kappa + kUStarMargin) {
    std::ostringstream os;
    os << "prior: u_star = " << u << " does not dominate the scanned sup kappa = "
       << kappa_scan.sup_kappa << " (margin " << kUStarMargin << ")";
    throw ValidationError(os.str());
  }
}

void validate_psi_for_kappa_class(const PriorSpec& spec, const ScanReport& kappa_scan) {
  if (spec.family == PsiFamily::Power && spec.a == 1.0 && kappa_scan.harmonic())
    throw ValidationError(
        "prior: Power with a = 1 on a harmonic kappa gives a harmonic psi "
        "(no strict superharmonicity); use a < 1 or the LogPower family");
}

double risk_improvement_leading_order(const PriorSpec& spec, const FilterModel& model,
                                      const ParameterPoint& at, int n_obs) {
  if (n_obs < 1) throw ValidationError("risk: n_obs must be >= 1");
  validate_prior_spec(spec, model);
  model.require_in_domain(at);
  const HermitianMetric m = metric(model, at, spec.truncation);
  const ScalarField psi = psi_field(spec, model);
  const double psi0 = psi.eval(at);
  ScalarField log_psi = psi;
  log_psi.eval = [psi](const ParameterPoint& p) { return std::log(psi.eval(p)); };
  const double grad_sq = gradient_norm_sq(m, log_psi, at);
  const double lap = laplace_beltrami(m, psi, at);
  const double base = 0.5 * grad_sq - lap / psi0;
  return base / (static_cast<double>(n_obs) * static_cast<double>(n_obs));
}

}  // namespace kig
