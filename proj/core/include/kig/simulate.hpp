#pragma once

#include <random>
#include <vector>

#include "kig/model.hpp"

namespace kig {

// Gaussian sample path of length n from the filter's moving-average
// representation x_t = sum_{r=0}^{R} h_r e_{t-r}, e ~ N(0,1) iid.  The model
// must have a real impulse response (real d, poles/zeros closed under
// conjugation or real).  The innovation history reaches back `truncation`
// steps, so n + truncation standard normals are drawn from the engine.
std::vector<double> simulate_process(const FilterModel& model, const ParameterPoint& at,
                                     int n, std::mt19937_64& rng,
                                     int truncation = kDefaultTruncation);

}  // namespace kig
