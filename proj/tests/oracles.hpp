#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's numerics; inputs are plain complex coefficient vectors.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "ratdyn/algebra.hpp"
#include "ratdyn/rational_map.hpp"

namespace oracle {

using C = std::complex<long double>;

// Lowest-degree-first coefficients.
inline std::vector<C> coeffs(const ratdyn::Polynomial& p) {
  std::vector<C> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex_ld());
  return out;
}

inline C horner(const std::vector<C>& c, C z) {
  C acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline std::vector<C> derivative(const std::vector<C>& c) {
  std::vector<C> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long double>(k));
  return d;
}

// Durand-Kerner on a (possibly non-monic) polynomial, degree >= 1.
inline std::vector<C> durand_kerner(std::vector<C> c) {
  while (c.size() > 1 && std::abs(c.back()) == 0) c.pop_back();
  const std::size_t n = c.size() - 1;
  const C lead = c.back();
  for (auto& x : c) x /= lead;
  std::vector<C> z(n);
  const C seed(0.4L, 0.9L);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(seed, static_cast<long double>(k));
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      C den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      const C step = horner(c, z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

// Distance on the sphere between finite/infinite points.
inline long double chordal(std::optional<C> a, std::optional<C> b) {
  if (!a && !b) return 0;
  if (!a) return 1 / std::sqrt(1 + std::norm(*b));
  if (!b) return 1 / std::sqrt(1 + std::norm(*a));
  return std::abs(*a - *b) / std::sqrt((1 + std::norm(*a)) * (1 + std::norm(*b)));
}

inline std::optional<C> as_opt(const ratdyn::SpherePoint& p) {
  if (p.is_infinity()) return std::nullopt;
  return p.value().to_complex_ld();
}

struct Map {
  std::vector<C> p, q;
  int d;
};

inline Map of(const ratdyn::RationalMap& r) { return {coeffs(r.numerator()), coeffs(r.denominator()), r.degree()}; }

inline std::optional<C> eval(const Map& m, std::optional<C> x) {
  if (!x) {
    const C a = m.p.size() == static_cast<std::size_t>(m.d) + 1 ? m.p.back() : C(0);
    const C b = m.q.size() == static_cast<std::size_t>(m.d) + 1 ? m.q.back() : C(0);
    if (std::abs(b) == 0) return std::nullopt;
    return a / b;
  }
  const C den = horner(m.q, *x);
  if (std::abs(den) == 0) return std::nullopt;
  return horner(m.p, *x) / den;
}

struct Pre {
  std::optional<C> x;
  bool simple;
};

// Preimages of y by brute force: roots of b P - a Q plus infinity at a
// degree drop. A finite root is simple when it is isolated from the other
// roots by more than `sep`.
inline std::vector<Pre> preimages(const Map& m, std::optional<C> y, long double sep = 1e-5L) {
  std::vector<C> f(static_cast<std::size_t>(m.d) + 1, C(0));
  if (y) {
    for (std::size_t k = 0; k < m.p.size(); ++k) f[k] += m.p[k];
    for (std::size_t k = 0; k < m.q.size(); ++k) f[k] -= *y * m.q[k];
  } else {
    for (std::size_t k = 0; k < m.q.size(); ++k) f[k] = m.q[k];
  }
  long double scale = 0;
  for (auto c : f) scale = std::max(scale, std::abs(c));
  int deg = m.d;
  while (deg >= 0 && std::abs(f[deg]) <= 1e-14L * scale) --deg;
  std::vector<Pre> out;
  if (deg >= 1) {
    f.resize(static_cast<std::size_t>(deg) + 1);
    const auto roots = durand_kerner(f);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      bool simple = true;
      for (std::size_t j = 0; j < roots.size(); ++j)
        if (j != i && std::abs(roots[i] - roots[j]) < sep * std::max<long double>(1, std::abs(roots[i]))) simple = false;
      out.push_back({roots[i], simple});
    }
  }
  const int inf_mult = m.d - std::max(deg, 0);
  if (inf_mult >= 1) out.push_back({std::nullopt, inf_mult == 1});
  return out;
}

// (four1): every simple preimage of every point of A lies in A.
inline bool four1(const Map& m, const std::vector<std::optional<C>>& a, long double tol = 1e-6L) {
  for (const auto& y : a)
    for (const auto& pre : preimages(m, y)) {
      if (!pre.simple) continue;
      bool inside = false;
      for (const auto& z : a)
        if (chordal(pre.x, z) < tol) inside = true;
      if (!inside) return false;
    }
  return true;
}

// Block sizes of a finite-dimensional algebra expression built from
// Matrix, exposed CompactsOn, Scalars, Zero, FinitePower, Tensor and DirectSum; nullopt for
// anything else.
inline std::optional<std::vector<long long>> blocks(const ratdyn::algebra::Expr& e) {
  using K = ratdyn::algebra::Kind;
  switch (e.kind) {
    case K::Matrix: return std::vector<long long>{e.n};
    case K::CompactsOn:
      if (e.n <= 0) return std::nullopt;
      return std::vector<long long>{e.n};
    case K::Scalars: return std::vector<long long>{1};
    case K::Zero: return std::vector<long long>{};
    case K::FinitePower: {
      auto b = blocks(e.children.at(0));
      if (!b) return std::nullopt;
      std::vector<long long> out;
      for (long long i = 0; i < e.n; ++i) out.insert(out.end(), b->begin(), b->end());
      return out;
    }
    case K::DirectSum: {
      std::vector<long long> out;
      for (const auto& c : e.children) {
        auto b = blocks(c);
        if (!b) return std::nullopt;
        out.insert(out.end(), b->begin(), b->end());
      }
      return out;
    }
    case K::Tensor: {
      std::vector<long long> out{1};
      for (const auto& c : e.children) {
        auto b = blocks(c);
        if (!b) return std::nullopt;
        std::vector<long long> next;
        for (long long x : out)
          for (long long y : *b) next.push_back(x * y);
        out = next;
      }
      return out;
    }
    default: return std::nullopt;
  }
}

inline long long dimension(const std::vector<long long>& b) {
  long long s = 0;
  for (long long n : b) s += n * n;
  return s;
}

}  // namespace oracle
