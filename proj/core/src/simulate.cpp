#include "kig/simulate.hpp"

#include <cmath>

#include "kig/errors.hpp"
#include "kig/transfer.hpp"

namespace kig {

std::vector<double> simulate_process(const FilterModel& model, const ParameterPoint& at,
                                     int n, std::mt19937_64& rng, int truncation) {
  if (n < 1) throw ValidationError("simulate: length must be >= 1");
  const ImpulseSeries s = impulse_response(model, at, truncation);
  double scale = 0.0;
  for (const Complex& c : s.h) scale = std::max(scale, std::abs(c));
  std::vector<double> h(s.h.size());
  for (std::size_t r = 0; r < s.h.size(); ++r) {
    if (std::abs(s.h[r].imag()) > 1e-12 * std::max(1.0, scale))
      throw ValidationError(
          "simulate: the impulse response is complex; simulation needs a real filter "
          "(real d and conjugate-closed poles/zeros)");
    h[r] = s.h[r].real();
  }
  const int R = static_cast<int>(h.size()) - 1;
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> eps(static_cast<std::size_t>(n + R));
  for (double& e : eps) e = normal(rng);
  // eps[t + R] is the innovation at time t; history back to t = -R.
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    double acc = 0.0;
    for (int r = 0; r <= R; ++r) acc += h[static_cast<std::size_t>(r)] *
                                        eps[static_cast<std::size_t>(t + R - r)];
    x[static_cast<std::size_t>(t)] = acc;
  }
  return x;
}

}  // namespace kig
