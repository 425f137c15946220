#pragma once

#include <complex>
#include <vector>

// Dense truncated formal power series over the complex numbers.  A series is
// a coefficient vector c[0..R] indexed by power; every operation truncates to
// a stated order and is exact in that sense (no tail estimation here).

namespace kig::fps {

using Complex = std::complex<double>;
using Series = std::vector<Complex>;

// Truncated Cauchy product, result order = max(order(a), order(b)).
Series mul(const Series& a, const Series& b);

// Truncated quotient; requires den[0] != 0.
Series div(const Series& num, const Series& den);

// exp of a series (any constant term; the scalar factor e^{g0} is applied).
Series exp(const Series& g);

// Principal log of a series; requires f[0] != 0.
Series log(const Series& f);

// Coefficients of (1 - z)^d up to the given order.
Series binomial_one_minus(Complex d, int order);

}  // namespace kig::fps
