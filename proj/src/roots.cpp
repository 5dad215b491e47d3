#include "ratdyn/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "ratdyn/errors.hpp"
#include "ratdyn/kernels.hpp"
#include "ratdyn/sphere.hpp"

namespace ratdyn {

namespace {

std::optional<mpq_class> rational_component(double v) {
  if (!std::isfinite(v) || std::abs(v) > 1e12) return std::nullopt;
  if (v == 0.0) return mpq_class(0);
  const double target_err = 1e-9 * std::max(1.0, std::abs(v));
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = v;
  for (int term = 0; term < 48; ++term) {
    const double a = std::floor(x);
    if (std::abs(a) > 1e13) break;
    const long long ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0;
    const long long k2 = ai * k1 + k0;
    if (k2 > 1000000 || k2 <= 0) break;
    if (std::abs(v - static_cast<double>(h2) / static_cast<double>(k2)) <= target_err) {
      mpq_class q(mpz_class(std::to_string(h2)), mpz_class(std::to_string(k2)));
      q.canonicalize();
      return q;
    }
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

double relative_residual(const std::vector<Complex>& c, Complex z) {
  Complex acc(0.0, 0.0);
  double scale = 0.0;
  const double az = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * z + c[k];
    scale = scale * az + std::abs(c[k]);
  }
  return scale > 0.0 ? std::abs(acc) / scale : std::abs(acc);
}

double relative_residual(const Polynomial& p, Complex z) { return relative_residual(p.to_complex(), z); }

Complex newton_polish(const std::vector<Complex>& c, Complex z, int steps, int order = 0) {
  // Newton on the order-th derivative (multiple roots are simple roots of p^(m-1)).
  std::vector<Complex> d = c;
  for (int o = 0; o < order; ++o) {
    std::vector<Complex> nd;
    for (std::size_t k = 1; k < d.size(); ++k) nd.push_back(d[k] * static_cast<double>(k));
    d = std::move(nd);
  }
  if (d.size() < 2) return z;
  double best = relative_residual(d, z);
  for (int s = 0; s < steps; ++s) {
    Complex p(0.0, 0.0), dp(0.0, 0.0);
    for (std::size_t k = d.size(); k-- > 0;) {
      dp = dp * z + p;
      p = p * z + d[k];
    }
    if (p == Complex(0.0, 0.0) || dp == Complex(0.0, 0.0)) break;
    Complex cand = z - p / dp;
    if (!std::isfinite(cand.real()) || !std::isfinite(cand.imag())) break;
    double r = relative_residual(d, cand);
    if (r > best) break;
    best = r;
    z = cand;
  }
  return z;
}

// Drops components that are pure rounding noise relative to |z|.
Complex clean(Complex z) {
  const double eps = 1e-16 * std::abs(z);
  return {std::abs(z.real()) <= eps ? 0.0 : z.real(), std::abs(z.imag()) <= eps ? 0.0 : z.imag()};
}

bool complex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<int> cluster_ids(const std::vector<Complex>& z, double radius) {
  const std::size_t n = z.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(z[i]), std::abs(z[j])});
      if (std::abs(z[i] - z[j]) <= radius * scale) parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
    }
  std::vector<int> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = find(static_cast<int>(i));
  // Canonical labelling: smallest member index.
  std::vector<int> canon(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int r = ids[i];
    if (canon[static_cast<std::size_t>(r)] < 0) canon[static_cast<std::size_t>(r)] = static_cast<int>(i);
    ids[i] = canon[static_cast<std::size_t>(r)];
  }
  return ids;
}

std::vector<Root> roots_floating(const Polynomial& p, const RootOptions& opt) {
  const auto c = p.to_complex();
  std::vector<Complex> approx = aberth_ehrlich(c, opt);
  std::sort(approx.begin(), approx.end(), complex_less);
  auto ids = cluster_ids(approx, opt.cluster_radius);
  if (ids != cluster_ids(approx, opt.cluster_radius * 10.0) || ids != cluster_ids(approx, opt.cluster_radius / 10.0)) {
    std::ostringstream os;
    os << "multiplicity ambiguous: clustering changes within a factor 10 of radius " << opt.cluster_radius;
    throw Error(ErrorCode::MultiplicityAmbiguous, os.str());
  }
  std::vector<Root> out;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    if (ids[i] != static_cast<int>(i)) continue;
    Complex sum(0.0, 0.0);
    int m = 0;
    for (std::size_t j = 0; j < approx.size(); ++j)
      if (ids[j] == static_cast<int>(i)) {
        sum += approx[j];
        ++m;
      }
    Complex z = sum / static_cast<double>(m);
    z = clean(newton_polish(c, z, opt.newton_polish_steps, m - 1));
    out.push_back({Scalar::floating(z), m, relative_residual(c, z)});
  }
  return out;
}

std::vector<Root> roots_exact(const Polynomial& p, const RootOptions& opt) {
  std::vector<Root> out;
  for (const auto& [f, k] : squarefree_decomposition(p)) {
    if (f.degree() == 1) {
      Scalar r = -f.coeffs()[0] / f.coeffs()[1];
      out.push_back({r, k, 0.0});
      continue;
    }
    const auto c = f.to_complex();
    std::vector<Complex> approx = aberth_ehrlich(c, opt);
    std::vector<Scalar> exact_found;
    for (Complex z : approx) {
      Scalar cand = rational_candidate(z);
      bool verified = cand.is_exact() && f.eval(cand).is_zero() &&
                      std::none_of(exact_found.begin(), exact_found.end(),
                                   [&](const Scalar& e) { return e.identical(cand); });
      if (verified) {
        exact_found.push_back(cand);
        out.push_back({cand, k, 0.0});
      } else {
        z = clean(newton_polish(c, z, opt.newton_polish_steps));
        out.push_back({Scalar::floating(z), k, relative_residual(f, z)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    return point_less(SpherePoint(a.value), SpherePoint(b.value));
  });
  return out;
}

}  // namespace

Scalar rational_candidate(Complex z) {
  auto re = rational_component(z.real());
  auto im = rational_component(z.imag());
  if (re && im) return Scalar::exact(*re, *im);
  return Scalar::floating(z);
}

std::vector<Complex> aberth_ehrlich(const std::vector<Complex>& coeffs, const RootOptions& opt) {
  const std::size_t n = coeffs.size() - 1;
  if (coeffs.size() < 2 || coeffs.back() == Complex(0.0, 0.0))
    throw Error(ErrorCode::InvalidInput, "aberth_ehrlich needs a polynomial of degree >= 1");
  std::vector<Complex> a(coeffs.size());
  for (std::size_t k = 0; k <= n; ++k) a[k] = coeffs[k] / coeffs.back();
  if (n == 1) return {-a[0]};

  double bound = 0.0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[k]));
  bound += 1.0;

  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(bound, angle);
  }

  std::vector<double> cre(n + 1), cim(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    cre[k] = a[k].real();
    cim[k] = a[k].imag();
  }
  std::vector<double> zr(n), zi(n), pr(n), pi(n), dr(n), di(n);
  std::vector<Complex> step(n);
  bool converged = false;
  for (int it = 0; it < opt.max_iterations && !converged; ++it) {
    for (std::size_t k = 0; k < n; ++k) {
      zr[k] = z[k].real();
      zi[k] = z[k].imag();
    }
    kernels::horner_eval({cre, cim, zr, zi, pr, pi, dr, di});
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex p(pr[i], pi[i]);
      const Complex dp(dr[i], di[i]);
      if (p == Complex(0.0, 0.0)) {
        step[i] = 0.0;
        continue;
      }
      Complex s(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) {
          Complex diff = z[i] - z[j];
          if (diff != Complex(0.0, 0.0)) s += 1.0 / diff;
        }
      Complex w;
      if (dp == Complex(0.0, 0.0)) {
        w = Complex(1e-8 * std::max(1.0, std::abs(z[i])), 0.0);
      } else {
        const Complex ratio = p / dp;
        const Complex denom = 1.0 - ratio * s;
        w = denom == Complex(0.0, 0.0) ? ratio : ratio / denom;
      }
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = Complex(0.0, 0.0);
      step[i] = w;
      if (std::abs(w) > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z[i])))
        converged = false;
    }
    for (std::size_t i = 0; i < n; ++i) z[i] -= step[i];
  }
  if (!converged) {
    std::ostringstream os;
    bool bad = false;
    os << "root finding failed after " << opt.max_iterations << " iterations; residuals:";
    for (Complex r : z) {
      double res = relative_residual(a, r);
      os << ' ' << res;
      if (!(res <= opt.residual_tolerance)) bad = true;
    }
    if (bad) throw Error(ErrorCode::RootFindingFailed, os.str());
  }
  return z;
}

std::vector<Root> find_roots(const Polynomial& p, const RootOptions& opt) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidInput, "find_roots needs degree >= 1");
  return p.is_exact() ? roots_exact(p, opt) : roots_floating(p, opt);
}

}  // namespace ratdyn
