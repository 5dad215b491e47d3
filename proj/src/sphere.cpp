#include "ratdyn/sphere.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "ratdyn/errors.hpp"

namespace ratdyn {

SpherePoint SpherePoint::infinity(bool exact) {
  SpherePoint p;
  p.z_ = exact ? Scalar(1) : Scalar::floating(1.0);
  p.w_ = exact ? Scalar(0) : Scalar::floating(0.0);
  return p;
}

SpherePoint SpherePoint::homogeneous(const Scalar& z, const Scalar& w) {
  if (w.is_zero()) {
    if (z.is_zero()) throw Error(ErrorCode::IndeterminateEvaluation, "homogeneous pair (0 : 0)");
    return infinity(z.is_exact() && w.is_exact());
  }
  if (z.is_exact() && w.is_exact()) return SpherePoint(z / w);
  // Ratios beyond double range are indistinguishable from infinity.
  const Complex q = z.to_complex() / w.to_complex();
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) return infinity(false);
  return SpherePoint(Scalar::floating(q));
}

SpherePoint SpherePoint::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "inf" || t == "infinity" || t == "oo") return infinity(true);
  return SpherePoint(Scalar::parse(text));
}

void SpherePoint::unit_coords(Complex& z, Complex& w) const {
  z = z_.to_complex();
  w = w_.to_complex();
  const double n = std::sqrt(std::norm(z) + std::norm(w));
  z /= n;
  w /= n;
}

SpherePoint SpherePoint::to_floating() const {
  if (is_infinity()) return infinity(false);
  const Complex c = z_.to_complex();
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return infinity(false);
  return SpherePoint(z_.to_floating());
}

std::string SpherePoint::to_string() const { return is_infinity() ? "inf" : z_.to_string(); }

bool SpherePoint::exactly_equal(const SpherePoint& o) const {
  return is_exact() && o.is_exact() && z_.identical(o.z_) && w_.identical(o.w_);
}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_exact() && b.is_exact() && a.exactly_equal(b)) return 0.0;
  Complex az, aw, bz, bw;
  a.unit_coords(az, aw);
  b.unit_coords(bz, bw);
  return std::min(1.0, std::abs(az * bw - bz * aw));
}

Coincidence coincide(const SpherePoint& a, const SpherePoint& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.exactly_equal(b) ? Coincidence::Equal : Coincidence::Distinct;
  const double d = chordal_distance(a, b);
  if (d <= tol * 1e-3) return Coincidence::Equal;
  if (d > tol) return Coincidence::Distinct;
  return Coincidence::Ambiguous;
}

bool same_point(const SpherePoint& a, const SpherePoint& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.exactly_equal(b);
  return chordal_distance(a, b) <= tol;
}

bool point_less(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
  const Scalar& x = a.value();
  const Scalar& y = b.value();
  if (x.is_exact() && y.is_exact()) {
    if (x.re_q() != y.re_q()) return x.re_q() < y.re_q();
    return x.im_q() < y.im_q();
  }
  const Complex cx = x.to_complex(), cy = y.to_complex();
  if (cx.real() != cy.real()) return cx.real() < cy.real();
  return cx.imag() < cy.imag();
}

}  // namespace ratdyn
