#pragma once

#include <span>
#include <vector>

#include "kig/model.hpp"

namespace kig {

// Fourier frequencies 2 pi j / n for j = 1 .. ceil(n/2) - 1 (zero and the
// Nyquist frequency excluded).
std::vector<double> fourier_frequencies(int n);

// Periodogram I(w_j) = |sum_t x_t e^{-i w_j t}|^2 / n at those frequencies.
std::vector<double> periodogram(std::span<const double> x);

// Spectral density S(w) = |h(e^{iw})|^2 of the filter.  Rational families
// use the exact factor form (real d required); generic models evaluate the
// truncated impulse response on the unit circle.
std::vector<double> spectral_density(const FilterModel& model, const ParameterPoint& at,
                                     std::span<const double> freqs,
                                     int truncation = kDefaultTruncation);

// Whittle log likelihood -sum_j [ log S(w_j) + I(w_j)/S(w_j) ].
double whittle_loglik(std::span<const double> x, const FilterModel& model,
                      const ParameterPoint& at, int truncation = kDefaultTruncation);

// Hot-path variant against a precomputed periodogram/spectrum pair.
double whittle_from_parts(std::span<const double> I, std::span<const double> S);

}  // namespace kig
