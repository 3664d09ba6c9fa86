#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace fracstab::detail {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Principal-branch power: z^p = exp(p (ln|z| + i arg z)), arg z in (-pi, pi].
// std::pow(complex, double) already uses the principal log; this wrapper pins
// the convention for z on the negative real axis, where arg must be +pi.
inline Complex principal_pow(Complex z, double p) {
  if (z == Complex(0.0, 0.0)) return {0.0, 0.0};
  double r = std::abs(z);
  double phi = std::arg(z);  // in (-pi, pi], atan2(+0.0, x<0) = +pi
  return std::polar(std::exp(p * std::log(r)), 0.0) *
         std::exp(Complex(0.0, p * phi));
}

// sin(pi x) / cos(pi x) with argument reduction so large x stays accurate.
inline double sinpi(double x) {
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  // remainder() already reduced against an exact multiple of 2, so pi*r is safe
  return std::sin(kPi * r);
}

inline double cospi(double x) {
  double r = std::remainder(x, 2.0);
  return std::cos(kPi * r);
}

// 1/Gamma(x) for any real x, including nonpositive values where Gamma poles
// make the reciprocal zero. Uses the reflection formula for x < 0.5.
inline double reciprocal_gamma(double x) {
  if (x >= 0.5) {
    if (x > 170.0) {
      // 1/Gamma underflows; go through logs.
      return std::exp(-std::lgamma(x));
    }
    return 1.0 / std::tgamma(x);
  }
  // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
  double s = sinpi(x);
  if (s == 0.0) return 0.0;  // nonpositive integer
  double lg = std::lgamma(1.0 - x);
  if (lg > 700.0) {
    // Gamma(1-x) overflows double; fold the magnitude into the exponent.
    return std::copysign(std::exp(lg + std::log(std::abs(s) / kPi)), s);
  }
  return s * std::tgamma(1.0 - x) / kPi;
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace fracstab::detail
