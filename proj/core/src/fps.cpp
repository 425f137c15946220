#include "kig/fps.hpp"

#include <algorithm>
#include <cmath>

#include "kig/errors.hpp"

namespace kig::fps {

Series mul(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) throw ValidationError("fps::mul: empty series");
  const std::size_t n = std::max(a.size(), b.size());
  Series c(n, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Complex(0.0)) continue;
    const std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Series div(const Series& num, const Series& den) {
  if (num.empty() || den.empty()) throw ValidationError("fps::div: empty series");
  if (den[0] == Complex(0.0)) throw ValidationError("fps::div: constant term of denominator is zero");
  const std::size_t n = std::max(num.size(), den.size());
  Series c(n, Complex(0.0));
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = k < num.size() ? num[k] : Complex(0.0);
    const std::size_t jmax = std::min(den.size() - 1, k);
    for (std::size_t j = 1; j <= jmax; ++j) acc -= den[j] * c[k - j];
    c[k] = acc / den[0];
  }
  return c;
}

Series exp(const Series& g) {
  if (g.empty()) throw ValidationError("fps::exp: empty series");
  const std::size_t n = g.size();
  Series f(n, Complex(0.0));
  f[0] = std::exp(g[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Complex acc(0.0);
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * g[j] * f[k - j];
    f[k] = acc / static_cast<double>(k);
  }
  return f;
}

Series log(const Series& f) {
  if (f.empty()) throw ValidationError("fps::log: empty series");
  if (f[0] == Complex(0.0)) throw ValidationError("fps::log: constant term is zero");
  const std::size_t n = f.size();
  Series g(n, Complex(0.0));
  g[0] = std::log(f[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Complex acc(0.0);
    for (std::size_t j = 1; j < k; ++j) acc += static_cast<double>(j) * g[j] * f[k - j];
    g[k] = f[k] / f[0] - acc / (static_cast<double>(k) * f[0]);
  }
  return g;
}

Series binomial_one_minus(Complex d, int order) {
  if (order < 0) throw ValidationError("fps::binomial_one_minus: negative order");
  Series c(static_cast<std::size_t>(order) + 1);
  c[0] = Complex(1.0);
  for (int k = 1; k <= order; ++k)
    c[k] = c[k - 1] * (-(d - Complex(k - 1.0)) / Complex(static_cast<double>(k)));
  return c;
}

}  // namespace kig::fps
