#pragma once

// Thin RAII wrapper around MPFR reals plus a complex type built on it.
// Precision is set per value at construction from a process-wide default
// (decimal digits); all rounding is to nearest.

#include <mpfr.h>

#include <string>

#include "hmf/rational.hpp"

namespace hmf {

class Real {
 public:
  Real() { mpfr_init2(v_, default_bits()); mpfr_set_zero(v_, 1); }
  Real(long n) : Real() { mpfr_set_si(v_, n, MPFR_RNDN); }
  Real(int n) : Real((long)n) {}
  Real(double d) : Real() { mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(const Rat& q) : Real() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, default_bits()); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static void set_default_digits(int decimal_digits);
  static int default_digits();
  static mpfr_prec_t default_bits();

  static Real pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  Real operator+(const Real& o) const { Real r; mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  Real operator-(const Real& o) const { Real r; mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  Real operator*(const Real& o) const { Real r; mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  Real operator/(const Real& o) const { Real r; mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
  Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

  bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
  bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
  bool operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
  bool is_zero() const { return mpfr_zero_p(v_); }

  Real abs() const { Real r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
  Real sqrt() const { Real r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
  Real exp() const { Real r; mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
  Real cos() const { Real r; mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
  Real sin() const { Real r; mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 20) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long n) : re(n) {}

  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator-() const { return {-re, -im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const {
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex conj() const { return {re, -im}; }
  Real abs2() const { return re * re + im * im; }
  Real abs() const { return abs2().sqrt(); }

  // exp(z) = e^re (cos im + i sin im)
  Complex exp() const {
    Real m = re.exp();
    return {m * im.cos(), m * im.sin()};
  }
};

}  // namespace hmf
