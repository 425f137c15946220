#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "kig/constants.hpp"
#include "kig/errors.hpp"
#include "kig/metric.hpp"
#include "kig/prior.hpp"
#include "support/oracles.hpp"

using kig::Complex;
using kig::FilterModel;
using kig::ParameterPoint;
using kig::PriorSpec;

namespace {

std::vector<ParameterPoint> ar1_grid() {
  std::vector<ParameterPoint> grid;
  grid.emplace_back(std::vector<Complex>{Complex(0.0)});
  for (double r : {0.15, 0.45, 0.75})
    for (double th : {0.0, 1.5707963267948966, 3.141592653589793, 4.71238898038469})
      grid.emplace_back(std::vector<Complex>{Complex(r * std::cos(th), r * std::sin(th))});
  return grid;
}

}  // namespace

TEST_CASE("default_u_star frozen values") {
  // (1/2 + p + q)^2 pi^2/6.
  const FilterModel fn = FilterModel::arfima(Complex(0.1), {}, {});
  CHECK(std::abs(kig::default_u_star(fn) - 0.411233516712056609) < 1e-15);
  const FilterModel ar = FilterModel::arfima(Complex(0.1), {Complex(0.5)}, {});
  CHECK(std::abs(kig::default_u_star(ar) - 3.70110165040850948) < 1e-14);
  const FilterModel am =
      FilterModel::arfima(Complex(0.1), {Complex(0.5)}, {Complex(-0.3)});
  CHECK(std::abs(kig::default_u_star(am) - 10.2808379178014152) < 1e-13);

  // Only Arfima has a built-in bound.
  const FilterModel arma = FilterModel::arma({Complex(0.5)}, {});
  CHECK_THROWS_AS(kig::default_u_star(arma), kig::ValidationError);

  PriorSpec spec;
  spec.u_star = 2.5;
  CHECK(kig::resolve_u_star(spec, arma) == 2.5);
  spec.u_star = -1.0;
  CHECK_THROWS_AS(kig::resolve_u_star(spec, arma), kig::ValidationError);
  spec.u_star.reset();
  CHECK_THROWS_AS(kig::resolve_u_star(spec, arma), kig::ValidationError);
  CHECK(kig::resolve_u_star(spec, ar) == doctest::Approx(3.70110165040850948));
}

TEST_CASE("validate_prior_spec rejections") {
  const FilterModel m = FilterModel::arfima(Complex(0.1), {Complex(0.5)}, {});
  PriorSpec spec;  // Power, a = 0.5, Potential kappa, default u*
  CHECK_NOTHROW(kig::validate_prior_spec(spec, m));

  PriorSpec exp_spec = spec;
  exp_spec.family = kig::PsiFamily::Exp;
  CHECK_THROWS_WITH_AS(kig::validate_prior_spec(exp_spec, m),
                       doctest::Contains("diagnostic"), kig::ValidationError);

  PriorSpec bad_a = spec;
  bad_a.a = 0.0;
  CHECK_THROWS_AS(kig::validate_prior_spec(bad_a, m), kig::ValidationError);
  bad_a.a = 1.5;
  CHECK_THROWS_AS(kig::validate_prior_spec(bad_a, m), kig::ValidationError);
  bad_a.a = 1.0;
  CHECK_NOTHROW(kig::validate_prior_spec(bad_a, m));

  PriorSpec bad_trunc = spec;
  bad_trunc.truncation = 0;
  CHECK_THROWS_AS(kig::validate_prior_spec(bad_trunc, m), kig::ValidationError);

  PriorSpec iw = spec;
  iw.kappa = kig::KappaKind::ImpulseWeighted;
  CHECK_THROWS_AS(kig::validate_prior_spec(iw, m), kig::ValidationError);  // empty
  iw.weights = {0.0, -1.0};
  CHECK_THROWS_AS(kig::validate_prior_spec(iw, m), kig::ValidationError);  // negative
  iw.weights = {0.0, 0.0};
  CHECK_THROWS_AS(kig::validate_prior_spec(iw, m), kig::ValidationError);  // all zero
  iw.weights = {0.0, 1.0};
  CHECK_NOTHROW(kig::validate_prior_spec(iw, m));

  PriorSpec cq = spec;
  cq.kappa = kig::KappaKind::CoordinateQuadratic;
  cq.weights = {1.0};  // model.dim() == 2
  CHECK_THROWS_WITH_AS(kig::validate_prior_spec(cq, m),
                       doctest::Contains("coordinate_quadratic"), kig::ValidationError);
  cq.weights = {1.0, 2.0};
  CHECK_NOTHROW(kig::validate_prior_spec(cq, m));
}

TEST_CASE("kappa_value for the three kinds") {
  const FilterModel ar = FilterModel::arma({Complex(0.5)}, {});
  const ParameterPoint at = ar.base_point();

  PriorSpec pot;
  pot.u_star = kig::kPiSqOver6;
  CHECK(std::abs(kig::kappa_value(pot, ar, at) - 0.267652639082732607) < 1e-15);

  PriorSpec iw = pot;
  iw.kappa = kig::KappaKind::ImpulseWeighted;
  iw.weights = {0.0, 1.0};  // |h_1|^2 = |lambda|^2
  CHECK(std::abs(kig::kappa_value(iw, ar, at) - 0.25) < 1e-15);

  const FilterModel am = FilterModel::arma({Complex(0.5, 0.2)}, {Complex(0.1)});
  PriorSpec cq;
  cq.kappa = kig::KappaKind::CoordinateQuadratic;
  cq.weights = {2.0, 3.0};
  cq.u_star = 5.0;
  CHECK(std::abs(kig::kappa_value(cq, am, am.base_point()) - (2.0 * 0.29 + 3.0 * 0.01)) <
        1e-15);
  CHECK_THROWS_AS(kig::kappa_value(cq, am, ParameterPoint({Complex(0.99), Complex(0.1)})),
                  kig::ValidationError);
}

TEST_CASE("psi_from_tau and psi_value") {
  PriorSpec spec;  // Power, a = 0.5
  CHECK(kig::psi_from_tau(spec, 4.0) == doctest::Approx(2.0).epsilon(1e-15));
  spec.family = kig::PsiFamily::LogPower;
  CHECK(kig::psi_from_tau(spec, 4.0) == doctest::Approx(std::log1p(2.0)).epsilon(1e-15));
  spec.family = kig::PsiFamily::Exp;
  CHECK(kig::psi_from_tau(spec, 0.3) == doctest::Approx(std::exp(0.3)).epsilon(1e-15));

  spec.family = kig::PsiFamily::Power;
  CHECK_THROWS_WITH_AS(kig::psi_from_tau(spec, 0.0), doctest::Contains("bound u*"),
                       kig::ValidationError);
  CHECK_THROWS_AS(kig::psi_from_tau(spec, -1.0), kig::ValidationError);

  const FilterModel ar = FilterModel::arma({Complex(0.5)}, {});
  PriorSpec full;
  full.u_star = kig::kPiSqOver6;
  const double tau = kig::kPiSqOver6 - 0.267652639082732607;
  CHECK(std::abs(kig::psi_value(full, ar, ar.base_point()) - std::sqrt(tau)) < 1e-14);
}

TEST_CASE("superharmonic scan passes for Power and flags the Exp diagnostic") {
  const FilterModel ar = FilterModel::arma({Complex(0.5)}, {});
  const std::vector<ParameterPoint> grid = ar1_grid();

  PriorSpec power;
  power.u_star = kig::kPiSqOver6;
  const kig::ScanReport rep = kig::superharmonic_scan(power, ar, grid);
  CHECK(rep.passed);
  CHECK(rep.violations == 0);
  CHECK(rep.grid_size == grid.size());
  CHECK(rep.max_lap < 0.0);  // strictly superharmonic, not merely within tol
  CHECK(rep.min_lap <= rep.max_lap);
  CHECK_FALSE(rep.harmonic());
  CHECK(rep.rows.empty());

  // Delta kappa = 2n > 0: subharmonic, with sup at the outermost ring.
  const kig::ScanReport sub = kig::subharmonic_check(power, ar, grid, 1e-8, true);
  CHECK(sub.passed);
  CHECK(sub.min_lap > 0.0);
  CHECK(std::abs(sub.min_lap - 2.0) < 1e-6);
  CHECK(std::abs(sub.sup_kappa - 0.671416248180654449) < 1e-14);  // Li2(0.5625)
  CHECK(std::abs(std::abs(sub.argmax_kappa.coords[0]) - 0.75) < 1e-12);
  CHECK(sub.rows.size() == grid.size());

  // Exp(u* - K) is convex: on an ARMA(1,1) family |grad K|^2 exceeds 2n = 4
  // near opposed real pole/zero pairs, so the scan must report violations.
  const FilterModel am = FilterModel::arma({Complex(-0.8)}, {Complex(0.8)});
  std::vector<ParameterPoint> probe;
  probe.emplace_back(std::vector<Complex>{Complex(-0.8), Complex(0.8)});
  probe.emplace_back(std::vector<Complex>{Complex(0.3), Complex(-0.25)});
  PriorSpec diag;
  diag.family = kig::PsiFamily::Exp;
  diag.u_star = 8.0;
  const kig::ScanReport bad = kig::superharmonic_scan(diag, am, probe);
  CHECK_FALSE(bad.passed);
  CHECK(bad.violations >= 1);
  CHECK(bad.max_lap > 0.0);

  PriorSpec power2;
  power2.u_star = 8.0;
  CHECK(kig::superharmonic_scan(power2, am, probe).passed);

  CHECK_THROWS_AS(kig::superharmonic_scan(power, ar, {}), kig::ValidationError);
}

TEST_CASE("validate_u_star enforces the scanned margin") {
  const FilterModel ar = FilterModel::arma({Complex(0.5)}, {});
  kig::ScanReport scan;
  scan.sup_kappa = 1.0;
  PriorSpec spec;
  spec.u_star = 1.0 + 2e-6;
  CHECK_NOTHROW(kig::validate_u_star(spec, ar, scan));
  spec.u_star = 1.0 + 5e-7;  // inside the safety margin
  CHECK_THROWS_WITH_AS(kig::validate_u_star(spec, ar, scan),
                       doctest::Contains("does not dominate"), kig::ValidationError);
}

TEST_CASE("validate_psi_for_kappa_class refuses harmonic Power a=1") {
  kig::ScanReport harmonic;
  harmonic.tolerance = 1e-8;
  harmonic.max_lap = 0.0;
  harmonic.min_lap = 0.0;
  REQUIRE(harmonic.harmonic());

  PriorSpec spec;
  spec.a = 1.0;
  CHECK_THROWS_WITH_AS(kig::validate_psi_for_kappa_class(spec, harmonic),
                       doctest::Contains("harmonic"), kig::ValidationError);
  spec.a = 0.5;
  CHECK_NOTHROW(kig::validate_psi_for_kappa_class(spec, harmonic));
  spec.a = 1.0;
  spec.family = kig::PsiFamily::LogPower;
  CHECK_NOTHROW(kig::validate_psi_for_kappa_class(spec, harmonic));

  kig::ScanReport subharmonic = harmonic;
  subharmonic.max_lap = 0.5;
  spec.family = kig::PsiFamily::Power;
  CHECK_NOTHROW(kig::validate_psi_for_kappa_class(spec, subharmonic));
}

TEST_CASE("risk improvement: sign, analytic value, exact 1/N^2 scaling") {
  const FilterModel ar = FilterModel::arma({Complex(0.5)}, {});
  const ParameterPoint at = ar.base_point();
  PriorSpec spec;
  spec.u_star = kig::kPiSqOver6;

  const double r100 = kig::risk_improvement_leading_order(spec, ar, at, 100);
  CHECK(r100 > 0.0);

  // For psi = tau^a with kappa = K on AR(1):
  //   base = a (Delta K)/tau + a (1 - a/2) |grad K|^2 / tau^2,
  // with Delta K = 2, |grad K|^2 = 2(1-u) log^2(1-u)/u at u = 1/4.
  const double tau = kig::kPiSqOver6 - 0.267652639082732607;
  const double grad_sq = 0.496565848860910385;
  const double base = 0.5 * (2.0 / tau) + 0.5 * 0.75 * (grad_sq / (tau * tau));
  CHECK(std::abs(r100 - base / 1e4) < 1e-6 * base / 1e4);

  // Division by N^2 commutes with doubling N bitwise.
  const double r200 = kig::risk_improvement_leading_order(spec, ar, at, 200);
  CHECK(r100 == 4.0 * r200);

  CHECK_THROWS_AS(kig::risk_improvement_leading_order(spec, ar, at, 0),
                  kig::ValidationError);
  PriorSpec exp_spec = spec;
  exp_spec.family = kig::PsiFamily::Exp;
  CHECK_THROWS_AS(kig::risk_improvement_leading_order(exp_spec, ar, at, 100),
                  kig::ValidationError);
}

TEST_CASE("jeffreys_density is the metric determinant") {
  const FilterModel m =
      FilterModel::arfima(Complex(0.23), {Complex(0.5, 0.2)}, {Complex(0.1, -0.6)});
  const double det = kig::metric(m, m.base_point()).det;
  CHECK(kig::jeffreys_density(m, m.base_point()) == det);
  CHECK(det > 0.0);
}
