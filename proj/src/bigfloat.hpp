#pragma once

#include <mpfr.h>

#include <complex>
#include <utility>

// Minimal RAII layer over MPFR for the extended-precision series summations.
// Only the handful of operations the Mittag-Leffler paths need; all rounding
// is to nearest.

namespace fracstab::detail {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  void set(double x) { mpfr_set_d(v_, x, MPFR_RNDN); }
  void add(const BigFloat& a, const BigFloat& b) { mpfr_add(v_, a.v_, b.v_, MPFR_RNDN); }
  void sub(const BigFloat& a, const BigFloat& b) { mpfr_sub(v_, a.v_, b.v_, MPFR_RNDN); }
  void mul(const BigFloat& a, const BigFloat& b) { mpfr_mul(v_, a.v_, b.v_, MPFR_RNDN); }
  void div(const BigFloat& a, const BigFloat& b) { mpfr_div(v_, a.v_, b.v_, MPFR_RNDN); }
  void gamma_of(const BigFloat& x) { mpfr_gamma(v_, x.v_, MPFR_RNDN); }
  void exp_of(const BigFloat& x) { mpfr_exp(v_, x.v_, MPFR_RNDN); }
  void sin_of(const BigFloat& x) { mpfr_sin(v_, x.v_, MPFR_RNDN); }
  void cos_of(const BigFloat& x) { mpfr_cos(v_, x.v_, MPFR_RNDN); }

  // |this| as a double with exponent clamped, for termination tests.
  double abs_double() const {
    BigFloat t(prec());
    mpfr_abs(t.v_, v_, MPFR_RNDN);
    return mpfr_get_d(t.v_, MPFR_RNDU);
  }

 private:
  mpfr_t v_;
};

// Complex value over BigFloat. The series only needs +, *, scaling and
// division by a positive real (the Gamma denominator).
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BigComplex(std::complex<double> z, mpfr_prec_t prec)
      : re(z.real(), prec), im(z.imag(), prec) {}

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  void set(std::complex<double> z) { re.set(z.real()); im.set(z.imag()); }

  void add(const BigComplex& a, const BigComplex& b) {
    re.add(a.re, b.re);
    im.add(a.im, b.im);
  }
  void sub(const BigComplex& a, const BigComplex& b) {
    re.sub(a.re, b.re);
    im.sub(a.im, b.im);
  }
  // this = a * b; `a` and `b` must not alias `this`.
  void mul(const BigComplex& a, const BigComplex& b, BigFloat& s1, BigFloat& s2) {
    s1.mul(a.re, b.re);
    s2.mul(a.im, b.im);
    re.sub(s1, s2);
    s1.mul(a.re, b.im);
    s2.mul(a.im, b.re);
    im.add(s1, s2);
  }
  void div_real(const BigComplex& a, const BigFloat& d) {
    re.div(a.re, d);
    im.div(a.im, d);
  }
  void mul_real(const BigComplex& a, const BigFloat& d) {
    re.mul(a.re, d);
    im.mul(a.im, d);
  }

  double abs_double() const {
    return std::hypot(re.abs_double(), im.abs_double());
  }

  BigFloat re;
  BigFloat im;
};

// exp(z) at the given precision.
inline BigComplex big_exp(std::complex<double> z, mpfr_prec_t prec) {
  BigFloat x(z.real(), prec), y(z.imag(), prec);
  BigFloat ex(prec), c(prec), s(prec);
  ex.exp_of(x);
  c.cos_of(y);
  s.sin_of(y);
  BigComplex out(prec);
  out.re.mul(ex, c);
  out.im.mul(ex, s);
  return out;
}

}  // namespace fracstab::detail
