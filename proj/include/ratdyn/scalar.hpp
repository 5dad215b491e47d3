#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace ratdyn {

using Complex = std::complex<double>;
using ComplexLD = std::complex<long double>;

/// Complex coefficient in one of two modes: an exact Gaussian rational
/// (re, im as reduced GMP fractions) or a pair of finite doubles. Mixed
/// arithmetic falls back to floating mode.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_q_(value) {}  // NOLINT(google-explicit-constructor)

  static Scalar exact(mpq_class re, mpq_class im = 0);
  static Scalar floating(double re, double im = 0.0);
  static Scalar floating(Complex z) { return floating(z.real(), z.imag()); }

  /// Parses "3", "-2/5", "1/2+3/4i", "i", "0.5-2e-3i". Decimal components
  /// force floating mode.
  static Scalar parse(const std::string& text);

  bool is_exact() const noexcept { return exact_; }
  bool is_zero() const;
  bool is_one() const;

  Complex to_complex() const;
  ComplexLD to_complex_ld() const;
  double abs() const { return std::abs(to_complex()); }
  double norm() const { return std::norm(to_complex()); }

  const mpq_class& re_q() const { return re_q_; }
  const mpq_class& im_q() const { return im_q_; }

  Scalar conj() const;
  Scalar to_floating() const { return floating(to_complex()); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Structural identity: same mode and same stored value.
  bool identical(const Scalar& o) const;

  /// Bit length of the largest numerator/denominator (0 in floating mode).
  std::size_t bit_size() const;

  /// Exact mode: "a/b+c/di"; floating mode: shortest round-trip decimals.
  std::string to_string() const;

 private:
  bool exact_ = true;
  mpq_class re_q_ = 0;
  mpq_class im_q_ = 0;
  double re_f_ = 0.0;
  double im_f_ = 0.0;

  void check_finite() const;
};

}  // namespace ratdyn
