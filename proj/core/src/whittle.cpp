#include "kig/whittle.hpp"

#include <cmath>

#include "kig/errors.hpp"
#include "kig/transfer.hpp"

namespace kig {

std::vector<double> fourier_frequencies(int n) {
  if (n < 4) throw ValidationError("whittle: need at least 4 observations");
  std::vector<double> w;
  const int jmax = (n + 1) / 2 - 1;  // ceil(n/2) - 1
  w.reserve(static_cast<std::size_t>(std::max(jmax, 0)));
  for (int j = 1; j <= jmax; ++j) w.push_back(2.0 * kPi * j / n);
  return w;
}

std::vector<double> periodogram(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  const std::vector<double> freqs = fourier_frequencies(n);
  std::vector<double> I(freqs.size());
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    const double w = freqs[j];
    double re = 0.0, im = 0.0;
    for (int t = 0; t < n; ++t) {
      re += x[static_cast<std::size_t>(t)] * std::cos(w * t);
      im -= x[static_cast<std::size_t>(t)] * std::sin(w * t);
    }
    I[j] = (re * re + im * im) / n;
  }
  return I;
}

std::vector<double> spectral_density(const FilterModel& model, const ParameterPoint& at,
                                     std::span<const double> freqs, int truncation) {
  model.require_in_domain(at);
  std::vector<double> S(freqs.size());
  if (model.kind() == ModelKind::GenericSeries) {
    const ImpulseSeries s = impulse_response(model, at, truncation);
    for (std::size_t j = 0; j < freqs.size(); ++j) {
      const Complex z = std::polar(1.0, -freqs[j]);
      Complex acc(0.0);
      for (std::size_t r = s.h.size(); r-- > 0;) acc = acc * z + s.h[r];
      S[j] = std::max(std::norm(acc), kSpectralFloor);
    }
    return S;
  }
  const Complex dc = model.d_of(at);
  if (std::abs(dc.imag()) > 1e-12)
    throw ValidationError("whittle: spectral densities need a real d");
  const double d = dc.real();
  const auto poles = model.poles_of(at);
  const auto zeros = model.zeros_of(at);
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    const Complex z = std::polar(1.0, freqs[j]);
    double s = d == 0.0 ? 1.0 : std::pow(std::norm(Complex(1.0) - z), d);
    for (const Complex& mu : zeros) s *= std::norm(Complex(1.0) - mu * z);
    for (const Complex& la : poles) s /= std::norm(Complex(1.0) - la * z);
    S[j] = std::max(s, kSpectralFloor);
  }
  return S;
}

double whittle_from_parts(std::span<const double> I, std::span<const double> S) {
  if (I.size() != S.size()) throw ValidationError("whittle: periodogram/spectrum mismatch");
  double acc = 0.0;
  for (std::size_t j = 0; j < I.size(); ++j) acc += std::log(S[j]) + I[j] / S[j];
  return -acc;
}

double whittle_loglik(std::span<const double> x, const FilterModel& model,
                      const ParameterPoint& at, int truncation) {
  const std::vector<double> freqs = fourier_frequencies(static_cast<int>(x.size()));
  const std::vector<double> I = periodogram(x);
  const std::vector<double> S = spectral_density(model, at, freqs, truncation);
  return whittle_from_parts(I, S);
}

}  // namespace kig
