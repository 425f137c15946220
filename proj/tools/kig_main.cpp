// kig: command line front end for the Kahler filter-geometry library.
//
// Exit codes: 0 success, 1 invalid input or numerical failure, 2 a structural
// check failed (non-Kahler family, closedness violation, superharmonicity
// violation).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kig/curvature.hpp"
#include "kig/errors.hpp"
#include "kig/experiment.hpp"
#include "kig/grid.hpp"
#include "kig/io.hpp"
#include "kig/metric.hpp"
#include "kig/prior.hpp"
#include "kig/transfer.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCheckFailed = 2;

// Option payloads may be inline JSON or a path to a JSON file.
std::string load_payload(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  return kig::read_text_file(arg);
}

void emit(const json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    kig::write_text_file(out_path, text);
}

json complex_json(const kig::Complex& c) { return json::array({c.real(), c.imag()}); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json metric_json(const kig::HermitianMetric& m) {
  json j;
  j["g"] = matrix_json(m.g);
  j["det"] = m.det;
  j["log_abs_det"] = m.log_abs_det;
  j["checks"] = {{"hermiticity_error", m.hermiticity_error},
                 {"min_eigenvalue", m.min_eigenvalue},
                 {"inverse_residual", m.inverse_residual}};
  return j;
}

struct CommonArgs {
  std::string model;
  std::string point;
  std::string out;
  std::string format = "json";
  int truncation = kig::kDefaultTruncation;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool point_allowed = true) {
  cmd->add_option("--model", args.model, "Model JSON (inline or a file path)")->required();
  if (point_allowed)
    cmd->add_option("--point", args.point,
                    "Parameter point JSON [[re,im],...] (default: the model's base point)");
  cmd->add_option("--truncation", args.truncation, "Series truncation order")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", args.out, "Write the report to this file instead of stdout");
  cmd->add_option("--format", args.format, "Report format")->check(CLI::IsMember({"json"}));
}

kig::FilterModel resolve_model(const CommonArgs& args) {
  return kig::parse_model_json(load_payload(args.model));
}

kig::ParameterPoint resolve_point(const CommonArgs& args, const kig::FilterModel& model) {
  if (args.point.empty()) return model.base_point();
  return kig::parse_point_json(load_payload(args.point));
}

int cmd_potential(const CommonArgs& args) {
  const kig::FilterModel model = resolve_model(args);
  const kig::ParameterPoint at = resolve_point(args, model);
  const kig::PotentialReport rep = kig::kahler_potential_report(model, at, args.truncation);
  json j;
  j["schema_version"] = 1;
  j["command"] = "potential";
  j["model"] = json::parse(kig::model_to_json(model));
  j["point"] = json::parse(kig::point_to_json(at));
  j["truncation"] = args.truncation;
  j["value"] = rep.value;
  j["tail_bound"] = rep.tail_bound;
  if (model.kind() != kig::ModelKind::GenericSeries)
    j["envelope_bound"] = kig::potential_bound(model, at);
  emit(j, args.out);
  return kExitOk;
}

int cmd_metric(const CommonArgs& args, const std::string& route) {
  const kig::FilterModel model = resolve_model(args);
  const kig::ParameterPoint at = resolve_point(args, model);
  kig::HermitianMetric m;
  if (route == "closed")
    m = kig::metric_closed_form(model, at);
  else if (route == "series")
    m = kig::metric_series(model, at, args.truncation);
  else if (route == "potential") {
    kig::ScalarField f = kig::domain_field(model, [&](const kig::ParameterPoint& p) {
      return kig::kahler_potential(model, p, args.truncation);
    });
    m = kig::metric_from_potential(f, at);
  } else {
    m = kig::metric(model, at, args.truncation);
  }
  json j;
  j["schema_version"] = 1;
  j["command"] = "metric";
  j["model"] = json::parse(kig::model_to_json(model));
  j["point"] = json::parse(kig::point_to_json(at));
  j["route"] = route.empty() ? "auto" : route;
  j["metric"] = metric_json(m);
  emit(j, args.out);
  return kExitOk;
}

int cmd_curvature(const CommonArgs& args) {
  const kig::FilterModel model = resolve_model(args);
  const kig::ParameterPoint at = resolve_point(args, model);
  const kig::HermitianMetric m = kig::metric(model, at, args.truncation);
  const kig::HermitianConnection conn = kig::connection(model, at, args.truncation);
  const Eigen::MatrixXcd ric = kig::ricci(model, at, args.truncation);
  const double scal = 2.0 * (ric * m.g_inv).trace().real();
  json j;
  j["schema_version"] = 1;
  j["command"] = "curvature";
  j["model"] = json::parse(kig::model_to_json(model));
  j["point"] = json::parse(kig::point_to_json(at));
  j["potential"] = kig::kahler_potential(model, at, args.truncation);
  j["metric"] = metric_json(m);
  json nonzero = json::array();
  for (int i = 0; i < conn.n; ++i)
    for (int k = i; k < conn.n; ++k)  // symmetric first pair: report i <= k
      for (int l = 0; l < conn.n; ++l)
        if (std::abs(conn.at(i, k, l)) > 1e-14)
          nonzero.push_back(
              {{"i", i}, {"j", k}, {"kbar", l}, {"value", complex_json(conn.at(i, k, l))}});
  j["connection"] = {{"max_abs", conn.max_abs()}, {"nonzero", nonzero}};
  j["ricci"] = matrix_json(ric);
  j["scalar_curvature"] = scal;
  emit(j, args.out);
  return kExitOk;
}

struct CheckArgs {
  CommonArgs common;
  std::string points;
  int samples = 8;
  std::uint64_t seed = 7;
  double tol = kig::kKahlerTol;
  double closedness_tol = kig::kClosednessTol;
};

std::vector<kig::ParameterPoint> sample_points(const kig::FilterModel& model, int count,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<kig::ParameterPoint> pts;
  pts.push_back(model.base_point());
  const double bound = (1.0 - model.domain_margin()) * 0.9;
  while (static_cast<int>(pts.size()) < count) {
    kig::ParameterPoint pt;
    pt.coords.resize(static_cast<std::size_t>(model.dim()));
    for (int attempt = 0; attempt < 1000; ++attempt) {
      for (int i = 0; i < model.dim(); ++i) {
        const bool is_d = model.has_d() && i == 0;
        if (is_d)
          pt.coords[0] = kig::Complex(0.45 * unit(rng), 0.0);
        else
          pt.coords[static_cast<std::size_t>(i)] =
              kig::Complex(bound * unit(rng), bound * unit(rng));
      }
      if (model.in_domain(pt)) break;
    }
    if (!model.in_domain(pt))
      throw kig::ValidationError("check-kahler: could not sample admissible points");
    pts.push_back(pt);
  }
  return pts;
}

int cmd_check_kahler(const CheckArgs& args) {
  const kig::FilterModel model = resolve_model(args.common);
  std::vector<kig::ParameterPoint> pts;
  if (!args.points.empty()) {
    const json j = json::parse(load_payload(args.points));
    for (const auto& p : j) pts.push_back(kig::parse_point_json(p.dump()));
  } else {
    pts = sample_points(model, std::max(args.samples, 2), args.seed);
  }
  const kig::KahlerReport rep = kig::check_kahler_condition(model, pts, args.tol);
  json j;
  j["schema_version"] = 1;
  j["command"] = "check-kahler";
  j["model"] = json::parse(kig::model_to_json(model));
  j["samples"] = rep.samples;
  j["kahler"] = rep.kahler;
  j["max_deviation"] = rep.max_deviation;
  j["eta0"] = complex_json(rep.eta0_reference);
  j["tolerance"] = rep.tolerance;
  bool closed_ok = true;
  if (rep.kahler) {
    const kig::ClosednessReport cl =
        kig::check_closedness(model, model.base_point(), args.closedness_tol,
                              args.common.truncation);
    closed_ok = cl.passed;
    j["closedness"] = {{"max_deviation", cl.max_deviation},
                       {"passed", cl.passed},
                       {"tolerance", args.closedness_tol}};
  }
  const bool passed = rep.kahler && closed_ok;
  j["passed"] = passed;
  emit(j, args.common.out);
  return passed ? kExitOk : kExitCheckFailed;
}

struct ScanArgs {
  CommonArgs common;
  std::string prior;
  std::string grid;
  std::string csv;
  double tol = kig::kSuperharmonicTol;
};

int cmd_prior_scan(const ScanArgs& args) {
  const kig::FilterModel model = resolve_model(args.common);
  const kig::PriorSpec spec = kig::parse_prior_json(load_payload(args.prior));
  if (spec.family != kig::PsiFamily::Exp) kig::validate_prior_spec(spec, model);
  kig::GridSpec gspec = kig::default_scan_grid();
  if (!args.grid.empty()) gspec = kig::parse_grid_json(load_payload(args.grid), gspec);
  const std::vector<kig::ParameterPoint> grid = kig::make_domain_grid(model, gspec);
  if (grid.empty())
    throw kig::ValidationError("prior-scan: the grid has no admissible points");
  const bool keep_rows = !args.csv.empty();
  const kig::ScanReport sub = kig::subharmonic_check(spec, model, grid, args.tol, keep_rows);
  kig::validate_u_star(spec, model, sub);
  kig::validate_psi_for_kappa_class(spec, sub);
  const kig::ScanReport sup = kig::superharmonic_scan(spec, model, grid, args.tol, keep_rows);
  if (keep_rows) {
    std::ofstream os(args.csv, std::ios::binary);
    if (!os) throw kig::ValidationError("cannot write file: " + args.csv);
    kig::write_scan_csv(os, sub, sup);
  }
  json j;
  j["schema_version"] = 1;
  j["command"] = "prior-scan";
  j["model"] = json::parse(kig::model_to_json(model));
  j["grid_size"] = grid.size();
  j["u_star"] = kig::resolve_u_star(spec, model);
  j["subharmonic"] = json::parse(kig::scan_report_to_json(sub));
  j["superharmonic"] = json::parse(kig::scan_report_to_json(sup));
  j["passed"] = sup.passed;
  emit(j, args.common.out);
  return sup.passed ? kExitOk : kExitCheckFailed;
}

struct RiskArgs {
  CommonArgs common;
  std::string mode = "asymptotic";
  std::string prior;
  std::string config;
  int n_obs = 100;
};

int cmd_risk(const RiskArgs& args) {
  json j;
  j["schema_version"] = 1;
  j["command"] = "risk";
  j["mode"] = args.mode;
  if (args.mode == "mc") {
    if (args.config.empty())
      throw kig::ValidationError("risk: --config is required in mc mode");
    const kig::ExperimentConfig cfg =
        kig::parse_experiment_json(load_payload(args.config));
    const kig::RiskEstimate est = kig::kl_risk_mc(cfg);
    j["estimate"] = json::parse(kig::risk_estimate_to_json(est));
    j["seed"] = cfg.seed;
    emit(j, args.common.out);
    return kExitOk;
  }
  const kig::FilterModel model = resolve_model(args.common);
  const kig::ParameterPoint at = resolve_point(args.common, model);
  j["model"] = json::parse(kig::model_to_json(model));
  j["point"] = json::parse(kig::point_to_json(at));
  j["n_obs"] = args.n_obs;
  if (args.prior.empty()) {
    // No shrinkage: the comparison is Jeffreys against itself.
    j["risk_improvement"] = 0.0;
  } else {
    const kig::PriorSpec spec = kig::parse_prior_json(load_payload(args.prior));
    j["risk_improvement"] =
        kig::risk_improvement_leading_order(spec, model, at, args.n_obs);
  }
  emit(j, args.common.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kahler information geometry of stationary minimum-phase linear filters"};
  app.require_subcommand(1);

  CommonArgs potential_args;
  CLI::App* potential = app.add_subcommand("potential", "Evaluate the Kahler potential");
  add_common(potential, potential_args);

  CommonArgs metric_args;
  std::string metric_route;
  CLI::App* metric_cmd = app.add_subcommand("metric", "Evaluate the information metric");
  add_common(metric_cmd, metric_args);
  metric_cmd->add_option("--route", metric_route, "closed | series | potential (default: auto)")
      ->check(CLI::IsMember({"closed", "series", "potential"}));

  CommonArgs curvature_args;
  CLI::App* curvature = app.add_subcommand(
      "curvature", "Evaluate potential, metric, connection, Ricci and scalar curvature");
  add_common(curvature, curvature_args);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check-kahler", "Probe the constant log-gain condition and closedness of the form");
  add_common(check, check_args.common, /*point_allowed=*/false);
  check->add_option("--points", check_args.points, "Explicit probe points [[...],[...]]");
  check->add_option("--samples", check_args.samples, "Number of sampled probe points")
      ->check(CLI::Range(2, 1000));
  check->add_option("--seed", check_args.seed, "Sampling seed");
  check->add_option("--tol", check_args.tol, "Tolerance on eta_0 deviations");
  check->add_option("--closedness-tol", check_args.closedness_tol,
                    "Tolerance on the closedness deviations");

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand(
      "prior-scan", "Scan a shrinkage prior for superharmonicity over a domain grid");
  add_common(scan, scan_args.common, /*point_allowed=*/false);
  scan->add_option("--prior", scan_args.prior, "Prior JSON (inline or a file path)")->required();
  scan->add_option("--grid", scan_args.grid, "Grid JSON (inline or a file path)");
  scan->add_option("--csv", scan_args.csv, "Write per-point rows to this CSV file");
  scan->add_option("--tol", scan_args.tol, "Laplacian sign tolerance");

  RiskArgs risk_args;
  CLI::App* risk = app.add_subcommand(
      "risk", "Leading-order risk improvement, or the Monte Carlo experiment");
  risk->add_option("--mode", risk_args.mode, "asymptotic | mc")
      ->check(CLI::IsMember({"asymptotic", "mc"}));
  risk->add_option("--model", risk_args.common.model, "Model JSON (asymptotic mode)");
  risk->add_option("--point", risk_args.common.point, "Parameter point JSON");
  risk->add_option("--prior", risk_args.prior, "Prior JSON");
  risk->add_option("--n-obs", risk_args.n_obs, "Observation count N in the 1/N^2 law")
      ->check(CLI::PositiveNumber);
  risk->add_option("--config", risk_args.config, "Experiment JSON (mc mode)");
  risk->add_option("--truncation", risk_args.common.truncation, "Series truncation order")
      ->check(CLI::PositiveNumber);
  risk->add_option("--out", risk_args.common.out, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (potential->parsed()) return cmd_potential(potential_args);
    if (metric_cmd->parsed()) return cmd_metric(metric_args, metric_route);
    if (curvature->parsed()) return cmd_curvature(curvature_args);
    if (check->parsed()) return cmd_check_kahler(check_args);
    if (scan->parsed()) return cmd_prior_scan(scan_args);
    if (risk->parsed()) {
      if (risk_args.mode == "asymptotic" && risk_args.common.model.empty())
        throw kig::ValidationError("risk: --model is required in asymptotic mode");
      return cmd_risk(risk_args);
    }
  } catch (const kig::NotKahlerError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const kig::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const kig::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
