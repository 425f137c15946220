#include "kig/grid.hpp"

#include <cmath>

#include "kig/errors.hpp"

namespace kig {
namespace {

std::vector<Complex> polar_values(const PolarGrid& g) {
  if (g.radii < 1 || g.angles < 1) throw ValidationError("grid: radii and angles must be >= 1");
  if (!(g.r_max > 0.0)) throw ValidationError("grid: r_max must be positive");
  std::vector<Complex> vals;
  vals.reserve(static_cast<std::size_t>(g.radii) * g.angles);
  for (int j = 1; j <= g.radii; ++j) {
    const double r = g.r_max * j / g.radii;
    for (int k = 0; k < g.angles; ++k) {
      const double th = 2.0 * kPi * (k + g.offset) / g.angles;
      vals.emplace_back(r * std::cos(th), r * std::sin(th));
    }
  }
  return vals;
}

std::vector<Complex> line_values(const LineGrid& g) {
  if (g.count < 1) throw ValidationError("grid: d count must be >= 1");
  std::vector<Complex> vals;
  vals.reserve(static_cast<std::size_t>(g.count));
  if (g.count == 1) {
    vals.emplace_back(g.lo, 0.0);
    return vals;
  }
  for (int i = 0; i < g.count; ++i)
    vals.emplace_back(g.lo + (g.hi - g.lo) * i / (g.count - 1), 0.0);
  return vals;
}

}  // namespace

GridSpec default_scan_grid() { return GridSpec{}; }

GridSpec default_posterior_grid() {
  GridSpec s;
  s.d_line = LineGrid{-0.45, 0.45, 9};
  s.poles = PolarGrid{50, 32, 0.9, 0.0};
  s.zeros = PolarGrid{50, 32, 0.9, 0.5};
  return s;
}

std::vector<ParameterPoint> make_domain_grid(const FilterModel& model, const GridSpec& spec) {
  if (spec.max_points < 1) throw ValidationError("grid: max_points must be >= 1");
  GridSpec s = spec;
  const int p = model.kind() == ModelKind::GenericSeries ? model.dim() : model.num_poles();
  const int q = model.kind() == ModelKind::GenericSeries ? 0 : model.num_zeros();

  auto total = [&]() -> double {
    double t = 1.0;
    if (model.has_d()) t *= s.d_line.count;
    for (int i = 0; i < p; ++i) t *= double(s.poles.radii) * s.poles.angles;
    for (int i = 0; i < q; ++i) t *= double(s.zeros.radii) * s.zeros.angles;
    return t;
  };
  // Trim the largest radial count until the raw product fits the cap.
  while (total() > static_cast<double>(s.max_points)) {
    PolarGrid* big = nullptr;
    if (p > 0) big = &s.poles;
    if (q > 0 && (big == nullptr || s.zeros.radii > big->radii)) big = &s.zeros;
    if (big == nullptr || big->radii <= 1) {
      if (model.has_d() && s.d_line.count > 1) {
        --s.d_line.count;
        continue;
      }
      throw ValidationError("grid: cannot reduce below max_points");
    }
    --big->radii;
  }

  std::vector<std::vector<Complex>> per_coord;
  if (model.has_d()) per_coord.push_back(line_values(s.d_line));
  const std::vector<Complex> pv = p > 0 ? polar_values(s.poles) : std::vector<Complex>{};
  const std::vector<Complex> zv = q > 0 ? polar_values(s.zeros) : std::vector<Complex>{};
  for (int i = 0; i < p; ++i) per_coord.push_back(pv);
  for (int i = 0; i < q; ++i) per_coord.push_back(zv);
  if (per_coord.empty()) return {};

  std::vector<ParameterPoint> out;
  std::vector<std::size_t> idx(per_coord.size(), 0);
  ParameterPoint pt;
  pt.coords.resize(per_coord.size());
  for (;;) {
    for (std::size_t c = 0; c < per_coord.size(); ++c) pt.coords[c] = per_coord[c][idx[c]];
    if (model.in_domain(pt)) out.push_back(pt);
    // odometer, last coordinate fastest
    std::size_t c = per_coord.size();
    for (;;) {
      if (c == 0) return out;
      --c;
      if (++idx[c] < per_coord[c].size()) break;
      idx[c] = 0;
      if (c == 0) return out;
    }
  }
}

}  // namespace kig
