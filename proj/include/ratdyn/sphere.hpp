#pragma once

#include <compare>
#include <string>

#include "ratdyn/scalar.hpp"

namespace ratdyn {

/// Point of the Riemann sphere in homogeneous coordinates (z : w),
/// canonicalized to (z : 1) for finite points and (1 : 0) for infinity.
class SpherePoint {
 public:
  SpherePoint() : z_(0), w_(1) {}
  explicit SpherePoint(Scalar finite) : z_(std::move(finite)), w_(1) {
    if (!z_.is_exact()) w_ = Scalar::floating(1.0);
  }
  static SpherePoint infinity(bool exact = true);
  /// Canonicalizes (z : w); throws when both vanish.
  static SpherePoint homogeneous(const Scalar& z, const Scalar& w);
  static SpherePoint parse(const std::string& text);

  bool is_infinity() const { return w_.is_zero(); }
  bool is_exact() const { return z_.is_exact() && w_.is_exact(); }

  /// Finite coordinate; only meaningful when !is_infinity().
  const Scalar& value() const { return z_; }
  const Scalar& z() const { return z_; }
  const Scalar& w() const { return w_; }

  /// Homogeneous pair normalized to unit Euclidean length.
  void unit_coords(Complex& z, Complex& w) const;

  SpherePoint to_floating() const;
  std::size_t bit_size() const { return z_.bit_size(); }
  std::string to_string() const;

  /// Exact comparison when both points are exact (false otherwise).
  bool exactly_equal(const SpherePoint& o) const;

 private:
  Scalar z_;
  Scalar w_;
};

/// Chordal distance normalized to [0, 1]: |z1 w2 - z2 w1| / (|(z1,w1)| |(z2,w2)|).
double chordal_distance(const SpherePoint& a, const SpherePoint& b);

enum class Coincidence { Equal, Distinct, Ambiguous };

/// Equal when exact and identical, or when the chordal distance survives a
/// 10^3 tightening of `tol`; Distinct beyond `tol`; Ambiguous in between.
Coincidence coincide(const SpherePoint& a, const SpherePoint& b, double tol);

/// Tolerant equality: exact when both exact, chordal <= tol otherwise.
bool same_point(const SpherePoint& a, const SpherePoint& b, double tol);

/// Total order used for deterministic output: finite before infinity, then
/// by real part, then imaginary part.
bool point_less(const SpherePoint& a, const SpherePoint& b);

}  // namespace ratdyn
