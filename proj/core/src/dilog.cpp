#include "kig/dilog.hpp"

#include <array>
#include <cmath>

namespace kig {
namespace {

using C = std::complex<double>;

// B_k / (k+1)! for even k (B_1 = -1/2 handled separately).
constexpr std::array<double, 31> kBernCoeff = {
    1.0,
    2.7777777777777777778e-02,
    -2.7777777777777777778e-04,
    4.7241118669690098262e-06,
    -9.1857730746619635509e-08,
    1.8978869988970999072e-09,
    -4.0647616451442255268e-11,
    8.9216910204564525552e-13,
    -1.9939295860721075687e-14,
    4.5189800296199181917e-16,
    -1.0356517612181247014e-17,
    2.3952186210261867457e-19,
    -5.5817858743250093363e-21,
    1.3091507554183212858e-22,
    -3.0874198024267402932e-24,
    7.3159756527022034204e-26,
    -1.7408456572340007410e-27,
    4.1576356446138997196e-29,
    -9.9621484882846221032e-31,
    2.3940344248961653005e-32,
    -5.7683473553673900843e-34,
    1.3931794796470079778e-35,
    -3.3721219654850894705e-37,
    8.1782087775621026218e-39,
    -1.9870108311523859256e-40,
    4.8357785180405508963e-42,
    -1.1786937248718384327e-43,
    2.8770964081172571450e-45,
    -7.0320590981560280150e-47,
    1.7208603145033146291e-48,
    -4.2160723905604454917e-50,
};

C dilog_series(C z) {
  // Direct series; intended for |z| <= 0.55 where ~60 terms reach 1e-17.
  C term = z;
  C sum = z;
  for (int k = 2; k <= 80; ++k) {
    term *= z;
    const C add = term / static_cast<double>(k * k);
    sum += add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

C dilog_bernoulli(C z) {
  const C w = -std::log(C(1.0) - z);
  const C w2 = w * w;
  // k = 0 and the lone odd term k = 1 (B_1 w^2 / 2! = -w^2/4).
  C sum = w - 0.25 * w2;
  C wp = w;  // w^{k+1} for even k, starting at k = 0
  for (std::size_t i = 1; i < kBernCoeff.size(); ++i) {
    wp *= w2;
    const C add = kBernCoeff[i] * wp;
    sum += add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

}  // namespace

std::complex<double> dilog(std::complex<double> z) {
  if (z == C(0.0)) return C(0.0);
  if (std::abs(z) <= 0.55) return dilog_series(z);
  return dilog_bernoulli(z);
}

}  // namespace kig
