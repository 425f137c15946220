#pragma once

#include <iosfwd>
#include <string>

#include "kig/experiment.hpp"
#include "kig/grid.hpp"
#include "kig/model.hpp"
#include "kig/prior.hpp"

namespace kig {

// JSON text interfaces (schemas documented in the README; complex numbers are
// always two-element arrays [re, im], plain reals are accepted where a real
// value is natural, e.g. for d).  Parse errors raise ValidationError naming
// the offending field.

FilterModel parse_model_json(const std::string& text);
ParameterPoint parse_point_json(const std::string& text);
PriorSpec parse_prior_json(const std::string& text);
GridSpec parse_grid_json(const std::string& text, const GridSpec& defaults = {});
ExperimentConfig parse_experiment_json(const std::string& text);

std::string model_to_json(const FilterModel& model);
std::string point_to_json(const ParameterPoint& at);
std::string scan_report_to_json(const ScanReport& rep);
std::string risk_estimate_to_json(const RiskEstimate& est);

// Scan rows as CSV: a schema_version column, the point index, interleaved
// coordinate components, then kappa / lap_kappa / psi / lap_psi.  Both
// reports must come from the same grid (the subharmonic scan supplies the
// kappa columns, the superharmonic scan the psi columns).
void write_scan_csv(std::ostream& os, const ScanReport& kappa_scan,
                    const ScanReport& psi_scan);

// File helpers.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace kig
