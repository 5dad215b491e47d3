#pragma once

#include <string>
#include <vector>

#include "ratdyn/polynomial.hpp"
#include "ratdyn/roots.hpp"
#include "ratdyn/sphere.hpp"

namespace ratdyn {

/// R = P / Q with gcd(P, Q) = 1 and degree max(deg P, deg Q) >= 2,
/// normalized so that the leading coefficient of Q is 1.
class RationalMap {
 public:
  /// Validates and normalizes. Exact input with a common factor is reduced
  /// (see was_reduced()); floating input must pass a resultant check.
  RationalMap(Polynomial numerator, Polynomial denominator, double tolerance = 1e-9);

  const Polynomial& numerator() const { return p_; }
  const Polynomial& denominator() const { return q_; }
  int degree() const { return degree_; }
  bool is_exact() const { return exact_; }
  bool is_polynomial() const { return q_.degree() == 0; }
  bool was_reduced() const { return reduced_; }
  double tolerance() const { return tol_; }

  std::string to_string() const;

 private:
  RationalMap() = default;
  friend RationalMap compose(const RationalMap&, const RationalMap&);
  Polynomial p_;
  Polynomial q_;
  int degree_ = 0;
  bool exact_ = true;
  bool reduced_ = false;
  double tol_ = 1e-9;
};

/// outer ∘ inner via homogeneous substitution (degrees multiply).
RationalMap compose(const RationalMap& outer, const RationalMap& inner);
/// R^n, n >= 1.
RationalMap iterate(const RationalMap& r, int n);

/// R(x) through (P_h(z,w) : Q_h(z,w)); throws IndeterminateEvaluation when
/// both components vanish (floating: both below tolerance).
SpherePoint evaluate(const RationalMap& r, const SpherePoint& x);
/// Same in long double, for re-verification of floating coincidences.
void evaluate_ld(const RationalMap& r, ComplexLD& z, ComplexLD& w);

/// The map in local charts: S = phi_{R(x)} ∘ R ∘ phi_x^{-1} as N/D with
/// t0 = phi_x(x). The chart is z when |x| <= 1 and 1/z otherwise, so t0 and
/// S(t0) are finite.
struct LocalChart {
  Polynomial num;
  Polynomial den;
  Scalar t0;
  Scalar s0;
};
LocalChart local_chart(const RationalMap& r, const SpherePoint& x);
Scalar chart_coordinate(const SpherePoint& x);
bool uses_inverse_chart(const SpherePoint& x);

/// Derivative of R at x in the adapted charts; the product along a cycle is
/// the multiplier.
Scalar chart_derivative(const RationalMap& r, const SpherePoint& x);

/// val(R, x): order of vanishing of S(t) - S(t0) at t0.
int local_valency(const RationalMap& r, const SpherePoint& x);
/// val(R^n, x) = prod_{j<n} val(R, R^j x).
long long valency(const RationalMap& r, int n, const SpherePoint& x);

struct Preimage {
  SpherePoint point;
  int multiplicity;
};
/// Roots of b P - a Q for y = (a : b), with infinity adjoined at the degree
/// drop. Multiplicities sum to deg R.
std::vector<Preimage> preimages(const RationalMap& r, const SpherePoint& y, const RootOptions& opt = {});

}  // namespace ratdyn
