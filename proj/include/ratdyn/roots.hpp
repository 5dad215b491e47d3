#pragma once

#include <vector>

#include "ratdyn/polynomial.hpp"

namespace ratdyn {

struct RootOptions {
  int max_iterations = 200;  // Aberth-Ehrlich cap
  int newton_polish_steps = 5;
  /// Clustering radius for floating-mode multiplicities, relative to
  /// max(1, |root|).
  double cluster_radius = 1e-6;
  /// Accept a non-converged Aberth run when every relative residual is below this.
  double residual_tolerance = 1e-9;
};

struct Root {
  Scalar value;  // exact when the root is a verified Gaussian rational
  int multiplicity = 1;
  double residual = 0.0;  // |p(root)| / sum |c_k| |root|^k
};

/// Roots with multiplicities (sum = deg p). Exact input: squarefree
/// factorization gives exact multiplicities and rational roots are snapped
/// and verified exactly. Floating input: multiplicities by clustering, with
/// a stability check at radius/10 and radius*10.
std::vector<Root> find_roots(const Polynomial& p, const RootOptions& opt = {});

/// Raw Aberth-Ehrlich simultaneous iteration on complex coefficients
/// (lowest first, degree >= 1). Returns deg p approximations.
std::vector<Complex> aberth_ehrlich(const std::vector<Complex>& coeffs, const RootOptions& opt);

/// Best Gaussian-rational candidate for a floating value (continued
/// fractions, denominators <= 10^6); not verified.
Scalar rational_candidate(Complex z);

}  // namespace ratdyn
