#include "kig/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kig/errors.hpp"

namespace kig {
namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("json: ") + e.what());
  }
}

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError("field '" + field + "': " + what);
}

const json& require(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) fail(field, "missing");
  return j.at(field);
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw ValidationError(std::string("field '") + it.key() + "' unknown in " + where);
  }
}

Complex parse_complex(const json& j, const std::string& field) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  fail(field, "expected a number or [re, im]");
}

std::vector<Complex> parse_complex_list(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_complex(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

double number_or(const json& j, const char* field, double fallback) {
  if (!j.contains(field)) return fallback;
  if (!j.at(field).is_number()) fail(field, "expected a number");
  return j.at(field).get<double>();
}

int int_or(const json& j, const char* field, int fallback) {
  if (!j.contains(field)) return fallback;
  if (!j.at(field).is_number_integer()) fail(field, "expected an integer");
  return j.at(field).get<int>();
}

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

json point_json(const ParameterPoint& pt) {
  json arr = json::array();
  for (const Complex& c : pt.coords) arr.push_back(complex_to_json(c));
  return arr;
}

SeriesSource preset_source(const std::string& preset) {
  if (preset == "flat")
    return [](const ParameterPoint& p, int R) {
      std::vector<Complex> eta(static_cast<std::size_t>(R) + 1, Complex(0.0));
      if (R >= 1) eta[1] = p.coords.at(0);
      return eta;
    };
  if (preset == "parameter_gain")
    return [](const ParameterPoint& p, int R) {
      std::vector<Complex> eta(static_cast<std::size_t>(R) + 1, Complex(0.0));
      eta[0] = p.coords.at(0);
      if (R >= 1) eta[1] = p.coords.at(0);
      return eta;
    };
  if (preset == "constant_gain_log2")
    return [](const ParameterPoint& p, int R) {
      std::vector<Complex> eta(static_cast<std::size_t>(R) + 1, Complex(0.0));
      eta[0] = Complex(std::log(2.0), 0.0);
      if (R >= 1) eta[1] = p.coords.at(0);
      return eta;
    };
  throw ValidationError("field 'preset': unknown generic preset '" + preset +
                        "' (known: flat, parameter_gain, constant_gain_log2)");
}

FilterModel model_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("model: expected an object");
  const json& type = require(j, "type");
  if (!type.is_string()) fail("type", "expected a string");
  const std::string kind = type.get<std::string>();
  const double margin = number_or(j, "margin", kDomainMargin);
  if (!(margin > 0.0 && margin < 1.0)) fail("margin", "must lie in (0, 1)");
  if (kind == "arfima") {
    reject_unknown(j, {"type", "d", "poles", "zeros", "margin"}, "an arfima model");
    const Complex d = parse_complex(require(j, "d"), "d");
    std::vector<Complex> poles =
        j.contains("poles") ? parse_complex_list(j.at("poles"), "poles") : std::vector<Complex>{};
    std::vector<Complex> zeros =
        j.contains("zeros") ? parse_complex_list(j.at("zeros"), "zeros") : std::vector<Complex>{};
    return FilterModel::arfima(d, std::move(poles), std::move(zeros), margin);
  }
  if (kind == "arma") {
    reject_unknown(j, {"type", "poles", "zeros", "margin"}, "an arma model");
    std::vector<Complex> poles =
        j.contains("poles") ? parse_complex_list(j.at("poles"), "poles") : std::vector<Complex>{};
    std::vector<Complex> zeros =
        j.contains("zeros") ? parse_complex_list(j.at("zeros"), "zeros") : std::vector<Complex>{};
    return FilterModel::arma(std::move(poles), std::move(zeros), margin);
  }
  if (kind == "generic") {
    reject_unknown(j, {"type", "preset", "base", "margin"}, "a generic model");
    const json& preset = require(j, "preset");
    if (!preset.is_string()) fail("preset", "expected a string");
    const std::string name = preset.get<std::string>();
    ParameterPoint base;
    if (j.contains("base")) base.coords = parse_complex_list(j.at("base"), "base");
    return FilterModel::generic(1, preset_source(name), std::move(base), name, margin);
  }
  fail("type", "unknown model type '" + kind + "' (known: arfima, arma, generic)");
}

PriorSpec prior_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("prior: expected an object");
  reject_unknown(j, {"family", "a", "kappa", "weights", "truncation", "u_star"}, "a prior");
  PriorSpec spec;
  const json& fam = require(j, "family");
  if (!fam.is_string()) fail("family", "expected a string");
  const std::string f = fam.get<std::string>();
  if (f == "power")
    spec.family = PsiFamily::Power;
  else if (f == "log_power")
    spec.family = PsiFamily::LogPower;
  else if (f == "exp")
    spec.family = PsiFamily::Exp;
  else
    fail("family", "unknown family '" + f + "' (known: power, log_power, exp)");
  spec.a = number_or(j, "a", 0.5);
  std::string kappa = "potential";
  if (j.contains("kappa")) {
    if (!j.at("kappa").is_string()) fail("kappa", "expected a string");
    kappa = j.at("kappa").get<std::string>();
  }
  if (kappa == "potential")
    spec.kappa = KappaKind::Potential;
  else if (kappa == "impulse_weighted")
    spec.kappa = KappaKind::ImpulseWeighted;
  else if (kappa == "coordinate_quadratic")
    spec.kappa = KappaKind::CoordinateQuadratic;
  else
    fail("kappa",
         "unknown kappa '" + kappa +
             "' (known: potential, impulse_weighted, coordinate_quadratic)");
  if (j.contains("weights")) {
    if (!j.at("weights").is_array()) fail("weights", "expected an array");
    for (const auto& w : j.at("weights")) {
      if (!w.is_number()) fail("weights", "expected numbers");
      spec.weights.push_back(w.get<double>());
    }
  }
  spec.truncation = int_or(j, "truncation", kDefaultTruncation);
  if (j.contains("u_star")) {
    if (!j.at("u_star").is_number()) fail("u_star", "expected a number");
    spec.u_star = j.at("u_star").get<double>();
  }
  return spec;
}

GridSpec grid_from_json(const json& j, const GridSpec& defaults) {
  if (!j.is_object()) throw ValidationError("grid: expected an object");
  reject_unknown(j, {"radii", "angles", "r_max", "pole_offset", "zero_offset", "d",
                     "max_points"},
                 "a grid");
  GridSpec spec = defaults;
  spec.poles.radii = int_or(j, "radii", spec.poles.radii);
  spec.poles.angles = int_or(j, "angles", spec.poles.angles);
  spec.poles.r_max = number_or(j, "r_max", spec.poles.r_max);
  spec.poles.offset = number_or(j, "pole_offset", spec.poles.offset);
  spec.zeros.radii = int_or(j, "radii", spec.zeros.radii);
  spec.zeros.angles = int_or(j, "angles", spec.zeros.angles);
  spec.zeros.r_max = number_or(j, "r_max", spec.zeros.r_max);
  spec.zeros.offset = number_or(j, "zero_offset", spec.zeros.offset);
  if (j.contains("d")) {
    const json& d = j.at("d");
    if (!d.is_object()) fail("d", "expected an object {lo, hi, count}");
    reject_unknown(d, {"lo", "hi", "count"}, "a d grid");
    spec.d_line.lo = number_or(d, "lo", spec.d_line.lo);
    spec.d_line.hi = number_or(d, "hi", spec.d_line.hi);
    spec.d_line.count = int_or(d, "count", spec.d_line.count);
  }
  if (j.contains("max_points")) {
    if (!j.at("max_points").is_number_integer() || j.at("max_points").get<long long>() < 1)
      fail("max_points", "expected a positive integer");
    spec.max_points = j.at("max_points").get<std::size_t>();
  }
  return spec;
}

}  // namespace

FilterModel parse_model_json(const std::string& text) {
  return model_from_json(parse_text(text));
}

ParameterPoint parse_point_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_array()) throw ValidationError("point: expected an array of coordinates");
  ParameterPoint pt;
  pt.coords = parse_complex_list(j, "point");
  return pt;
}

PriorSpec parse_prior_json(const std::string& text) {
  return prior_from_json(parse_text(text));
}

GridSpec parse_grid_json(const std::string& text, const GridSpec& defaults) {
  return grid_from_json(parse_text(text), defaults);
}

ExperimentConfig parse_experiment_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) throw ValidationError("experiment: expected an object");
  reject_unknown(j,
                 {"model", "true_point", "prior", "grid", "train_length", "predict_length",
                  "replications", "truncation", "seed"},
                 "an experiment");
  ExperimentConfig cfg{.model = model_from_json(require(j, "model"))};
  cfg.true_point = j.contains("true_point")
                       ? ParameterPoint(parse_complex_list(j.at("true_point"), "true_point"))
                       : cfg.model.base_point();
  if (j.contains("prior") && !j.at("prior").is_null())
    cfg.shrinkage = prior_from_json(j.at("prior"));
  if (j.contains("grid")) cfg.posterior_grid = grid_from_json(j.at("grid"), default_posterior_grid());
  cfg.train_length = int_or(j, "train_length", cfg.train_length);
  cfg.predict_length = int_or(j, "predict_length", cfg.predict_length);
  cfg.replications = int_or(j, "replications", cfg.replications);
  cfg.truncation = int_or(j, "truncation", cfg.truncation);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer()) fail("seed", "expected an integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  return cfg;
}

std::string model_to_json(const FilterModel& model) {
  json j;
  switch (model.kind()) {
    case ModelKind::Arfima: {
      j["type"] = "arfima";
      j["d"] = complex_to_json(model.d_of(model.base_point()));
      break;
    }
    case ModelKind::RationalArma:
      j["type"] = "arma";
      break;
    case ModelKind::GenericSeries:
      j["type"] = "generic";
      j["preset"] = model.label();
      j["base"] = point_json(model.base_point());
      j["margin"] = model.domain_margin();
      return j.dump();
  }
  json poles = json::array(), zeros = json::array();
  for (const Complex& c : model.poles_of(model.base_point())) poles.push_back(complex_to_json(c));
  for (const Complex& c : model.zeros_of(model.base_point())) zeros.push_back(complex_to_json(c));
  j["poles"] = poles;
  j["zeros"] = zeros;
  j["margin"] = model.domain_margin();
  return j.dump();
}

std::string point_to_json(const ParameterPoint& at) { return point_json(at).dump(); }

std::string scan_report_to_json(const ScanReport& rep) {
  json j;
  j["grid_size"] = rep.grid_size;
  j["tolerance"] = rep.tolerance;
  j["violations"] = rep.violations;
  j["passed"] = rep.passed;
  j["max_lap"] = rep.max_lap;
  j["min_lap"] = rep.min_lap;
  j["argmax_lap"] = point_json(rep.argmax_lap);
  j["sup_kappa"] = rep.sup_kappa;
  j["argmax_kappa"] = point_json(rep.argmax_kappa);
  j["harmonic"] = rep.harmonic();
  return j.dump();
}

std::string risk_estimate_to_json(const RiskEstimate& est) {
  json j;
  j["replications"] = est.replications;
  j["grid_size"] = est.grid_size;
  j["risk_jeffreys"] = est.risk_jeffreys;
  j["risk_shrinkage"] = est.risk_shrinkage;
  j["difference"] = est.difference;
  j["stderr_difference"] = est.stderr_difference;
  return j.dump();
}

void write_scan_csv(std::ostream& os, const ScanReport& kappa_scan,
                    const ScanReport& psi_scan) {
  if (kappa_scan.rows.size() != psi_scan.rows.size())
    throw ValidationError("csv: scans cover different grids");
  if (kappa_scan.rows.empty()) throw ValidationError("csv: scans carry no rows");
  const int n = kappa_scan.rows.front().point.dim();
  os << "schema_version,index";
  for (int i = 0; i < n; ++i) os << ",coord_" << i << "_re,coord_" << i << "_im";
  os << ",kappa,lap_kappa,psi,lap_psi\n";
  char buf[64];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << ',' << buf;
  };
  for (std::size_t r = 0; r < kappa_scan.rows.size(); ++r) {
    const ScanRow& ka = kappa_scan.rows[r];
    const ScanRow& ps = psi_scan.rows[r];
    os << 1 << ',' << r;
    for (int i = 0; i < n; ++i) {
      emit(ka.point.coords[static_cast<std::size_t>(i)].real());
      emit(ka.point.coords[static_cast<std::size_t>(i)].imag());
    }
    emit(ka.kappa);
    emit(ka.lap);
    emit(ps.value);
    emit(ps.lap);
    os << '\n';
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << text;
}

}  // namespace kig
