#pragma once

#include <span>
#include <vector>

#include "ratdyn/scalar.hpp"

namespace ratdyn {

/// Univariate polynomial over Scalar. Coefficients are stored lowest degree
/// first; the I/O helpers use highest-degree-first order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> lowest_first);
  static Polynomial from_highest_first(std::span<const Scalar> coeffs);
  static Polynomial monomial(const Scalar& c, int degree);
  static Polynomial linear(const Scalar& c0, const Scalar& c1) { return Polynomial({c0, c1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  std::vector<Scalar> highest_first() const;
  const Scalar& leading() const { return coeffs_.back(); }
  Scalar coeff(int k) const;

  Scalar eval(const Scalar& x) const;
  Complex eval(Complex x) const;
  ComplexLD eval(ComplexLD x) const;
  /// sum_k c_k z^k w^(deg - k) for an explicit homogeneous degree.
  Scalar eval_homogeneous(const Scalar& z, const Scalar& w, int deg) const;
  ComplexLD eval_homogeneous(ComplexLD z, ComplexLD w, int deg) const;

  Polynomial derivative() const;
  /// p(x + a), i.e. the Taylor expansion around a.
  Polynomial taylor_shift(const Scalar& a) const;
  /// z^deg p(1/z) for the given homogeneous degree.
  Polynomial reversed(int deg) const;
  Polynomial to_floating() const;
  std::vector<Complex> to_complex() const;
  Polynomial monic() const;
  /// Floating mode: drops leading coefficients below eps * max |c_k|
  /// (cancellation residue). Exact polynomials are returned unchanged.
  Polynomial trimmed_relative(double eps) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  bool identical(const Polynomial& o) const;

 private:
  std::vector<Scalar> coeffs_;
  void trim();
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd over the Gaussian rationals; both inputs must be exact.
Polynomial gcd_exact(Polynomial a, Polynomial b);

struct SquarefreeFactor {
  Polynomial factor;  // squarefree, monic, degree >= 1
  int multiplicity;
};
/// Yun's algorithm; exact input only. Product of factor^multiplicity equals
/// the monic input.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

}  // namespace ratdyn
