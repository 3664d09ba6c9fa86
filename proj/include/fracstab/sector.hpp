#pragma once

#include <cmath>
#include <complex>

namespace fracstab {

// The open sector of nonzero complex numbers with |arg z| < alpha*pi/2.
// Eigenvalues of the linear part landing here drive instability of the
// fractional system of order alpha.
inline double sector_half_angle(double alpha) {
  return alpha * 3.14159265358979323846 / 2.0;
}

inline bool in_unstable_sector(double alpha, std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) return false;
  return std::abs(std::arg(z)) < sector_half_angle(alpha);
}

}  // namespace fracstab
