#pragma once

#include <numbers>

namespace kig {

// Admissible domain.  Poles and zeros are kept strictly inside the unit disk
// with a fixed modulus margin; the fractional-differencing exponent keeps its
// real part in (-1/2, 1/2) (the imaginary part is unconstrained so that
// holomorphic probes remain valid).
inline constexpr double kDomainMargin = 0.05;
inline constexpr double kMaxAbsD = 0.5;
// Minimum pairwise separation between poles/zeros; closer pairs (nearly)
// cancel and the parameters stop being identifiable.
inline constexpr double kSeparationTol = 1e-8;

// Default truncation order for series evaluations.
inline constexpr int kDefaultTruncation = 4096;

// Finite differences (relative steps; see wirtinger.hpp).  The third-order
// step balances the h^2 truncation error of the nested central stencil
// against the eps/h^3 rounding noise; 4e-4 is near the optimum for smooth
// potentials of unit scale.
inline constexpr double kFdStepSecond = 1e-4;
inline constexpr double kFdStepThird = 4e-4;
inline constexpr int kFdMaxHalvings = 6;

// Structural checks.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kInverseResidualTol = 1e-10;
inline constexpr double kKahlerTol = 1e-8;
inline constexpr double kClosednessTol = 1e-6;
inline constexpr double kSuperharmonicTol = 1e-8;

// Margin added when validating the bound u* against the supremum of kappa.
inline constexpr double kUStarMargin = 1e-6;

// Floor applied to spectral densities inside Whittle likelihoods.
inline constexpr double kSpectralFloor = 1e-12;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPiSqOver6 = kPi * kPi / 6.0;

}  // namespace kig
