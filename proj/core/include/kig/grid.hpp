#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kig/model.hpp"

namespace kig {

// Polar grid for one complex coordinate: radii r_max * j / radii
// (j = 1..radii) times angles 2*pi*(k + offset)/angles (k = 0..angles-1).
// `offset` is a fraction of one angular step.
struct PolarGrid {
  int radii = 20;
  int angles = 16;
  double r_max = 0.9;
  double offset = 0.0;
};

// Evenly spaced real values for the fractional-differencing coordinate.
struct LineGrid {
  double lo = -0.45;
  double hi = 0.45;
  int count = 9;
};

// Grid specification for a whole model.  Pole coordinates share `poles`,
// zero coordinates share `zeros` (offset by half an angular step by default
// so pole and zero samples never coincide, which would be inadmissible).
// When the product of all per-coordinate counts exceeds max_points, the
// largest radial count is decremented (ties: poles first) until it fits.
struct GridSpec {
  LineGrid d_line{};
  PolarGrid poles{};
  PolarGrid zeros{20, 16, 0.9, 0.5};
  std::size_t max_points = 100000;
};

// Default grids used by the scan and experiment commands.
GridSpec default_scan_grid();
GridSpec default_posterior_grid();

// Cartesian product of the per-coordinate grids, restricted to admissible
// points (inadmissible combinations are dropped).  Deterministic order.
std::vector<ParameterPoint> make_domain_grid(const FilterModel& model,
                                             const GridSpec& spec = {});

}  // namespace kig
