#pragma once

#include <complex>

namespace kig {

// Complex dilogarithm Li2(z) = sum_{k>=1} z^k / k^2, evaluated to close to
// machine precision for |z| bounded away from 1 (the use sites keep
// |z| <= (1 - margin)^2 or pair a unit-modulus factor with a contracting one,
// so |1 - z| stays well off zero).  Small arguments use the defining series;
// otherwise the series in w = -log(1 - z) with Bernoulli-number coefficients,
// which converges for |w| < 2*pi.
std::complex<double> dilog(std::complex<double> z);

}  // namespace kig
