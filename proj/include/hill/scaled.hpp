#pragma once

#include <cmath>
#include <complex>

#include "hill/types.hpp"

namespace hill {

// Complex number carried as m * exp(s) with |m| kept near 1.  The entire
// functions of this project grow like exp(c (1+t) |Im z|), which overflows
// double well inside the radii the counting law needs, so every quantity that
// crosses module boundaries at large |Im z| travels in this form.
struct Scaled {
  cplx m{0.0, 0.0};
  double s = 0.0;  // log scale; value = m * exp(s)

  Scaled() = default;
  Scaled(cplx mantissa, double logscale) : m(mantissa), s(logscale) { normalize(); }
  explicit Scaled(cplx v) : Scaled(v, 0.0) {}
  explicit Scaled(double v) : Scaled(cplx(v, 0.0), 0.0) {}

  void normalize() {
    double a = std::abs(m);
    if (a == 0.0 || std::isinf(a) || std::isnan(a)) {
      s = (a == 0.0) ? 0.0 : s;
      return;
    }
    if (a > 4.0 || a < 0.25) {
      double d = std::log(a);
      m /= std::exp(d);
      s += d;
    }
  }

  bool zero() const { return m == cplx(0.0, 0.0); }

  // log|value|; -inf for zero.
  double log_abs() const { return zero() ? -std::numeric_limits<double>::infinity() : s + std::log(std::abs(m)); }
  double arg() const { return std::arg(m); }

  cplx value() const {
    if (zero()) return {0.0, 0.0};
    return m * std::exp(s);
  }

  friend Scaled operator*(const Scaled& a, const Scaled& b) { return {a.m * b.m, a.s + b.s}; }
  friend Scaled operator*(const Scaled& a, cplx b) { return {a.m * b, a.s}; }
  friend Scaled operator*(cplx b, const Scaled& a) { return {a.m * b, a.s}; }
  friend Scaled operator/(const Scaled& a, const Scaled& b) { return {a.m / b.m, a.s - b.s}; }
  friend Scaled operator-(const Scaled& a) { return {-a.m, a.s}; }

  friend Scaled operator+(const Scaled& a, const Scaled& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    // align to the larger exponent; the smaller term may underflow to 0, which
    // is the correct limit.
    if (a.s >= b.s) return {a.m + b.m * std::exp(b.s - a.s), a.s};
    return {a.m * std::exp(a.s - b.s) + b.m, b.s};
  }
  friend Scaled operator-(const Scaled& a, const Scaled& b) { return a + (-b); }

  Scaled sqrt_principal() const {
    if (zero()) return Scaled(cplx(0.0), 0.0);
    return {std::sqrt(m), s / 2.0};
  }
};

// value = a relative to reference scale exp(ref): used when comparing terms
// that share a common analytic growth envelope.
inline double rel_abs(const Scaled& a, double ref_log) {
  double la = a.log_abs();
  if (std::isinf(la)) return 0.0;
  return std::exp(la - ref_log);
}

}  // namespace hill
