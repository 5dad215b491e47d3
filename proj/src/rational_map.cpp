#include "ratdyn/rational_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ratdyn/errors.hpp"

namespace ratdyn {

namespace {

bool inside_unit_disk(const Scalar& z) {
  if (z.is_exact()) return z.re_q() * z.re_q() + z.im_q() * z.im_q() <= 1;
  return z.norm() <= 1.0;
}

std::string poly_text(const Polynomial& p) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& c : p.highest_first()) {
    if (!first) os << ", ";
    os << c.to_string();
    first = false;
  }
  os << ']';
  return os.str();
}

double relative_size(const Polynomial& p, Complex z) {
  double scale = 0.0;
  const double az = std::abs(z);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) scale = scale * az + it->abs();
  return scale > 0.0 ? std::abs(p.eval(z)) / scale : 0.0;
}

void normalize_pair(Polynomial& p, Polynomial& q) {
  const Scalar inv = Scalar(1) / q.leading();
  p *= inv;
  q *= inv;
}

}  // namespace

RationalMap::RationalMap(Polynomial numerator, Polynomial denominator, double tolerance)
    : p_(std::move(numerator)), q_(std::move(denominator)), tol_(tolerance) {
  if (q_.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator is the zero polynomial");
  if (p_.is_zero()) throw Error(ErrorCode::DegreeTooLow, "constant map has degree 0");
  exact_ = p_.is_exact() && q_.is_exact();
  if (!exact_) {
    p_ = p_.to_floating();
    q_ = q_.to_floating();
  }
  if (exact_) {
    Polynomial g = gcd_exact(p_, q_);
    if (g.degree() >= 1) {
      p_ = divmod(p_, g).quotient;
      q_ = divmod(q_, g).quotient;
      reduced_ = true;
    }
  }
  degree_ = std::max(p_.degree(), q_.degree());
  if (degree_ < 2) {
    std::ostringstream os;
    os << "map has degree " << degree_ << (reduced_ ? " after cancelling common factors" : "") << "; degree at least 2 required";
    throw Error(ErrorCode::DegreeTooLow, os.str());
  }
  if (!exact_ && q_.degree() >= 1 && p_.degree() >= 1) {
    // Floating resultant check: no root of Q may be a numerical root of P.
    std::vector<Complex> roots;
    try {
      roots = aberth_ehrlich(q_.to_complex(), RootOptions{});
    } catch (const Error&) {
      roots.clear();
    }
    for (Complex r : roots) {
      if (relative_size(p_, r) <= tol_) {
        std::ostringstream os;
        os << "numerator and denominator share a root near " << r.real() << (r.imag() < 0 ? "" : "+") << r.imag()
           << "i (resultant vanishes within tolerance)";
        throw Error(ErrorCode::InvalidInput, os.str());
      }
    }
  }
  normalize_pair(p_, q_);
}

std::string RationalMap::to_string() const { return poly_text(p_) + " / " + poly_text(q_); }

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  const int d = outer.degree();
  const int e = inner.degree();
  // Homogeneous substitution: P(A, B) / Q(A, B) with powers of A and B.
  std::vector<Polynomial> pa{Polynomial({Scalar(1)})}, pb{Polynomial({Scalar(1)})};
  for (int k = 1; k <= d; ++k) {
    pa.push_back(pa.back() * inner.numerator());
    pb.push_back(pb.back() * inner.denominator());
  }
  Polynomial num, den;
  for (int k = 0; k <= d; ++k) {
    const Polynomial term = pa[static_cast<std::size_t>(k)] * pb[static_cast<std::size_t>(d - k)];
    if (!outer.numerator().coeff(k).is_zero()) num += term * outer.numerator().coeff(k);
    if (!outer.denominator().coeff(k).is_zero()) den += term * outer.denominator().coeff(k);
  }
  RationalMap out;
  out.exact_ = outer.exact_ && inner.exact_;
  out.tol_ = std::min(outer.tol_, inner.tol_);
  if (!out.exact_) {
    num = num.to_floating().trimmed_relative(1e-15);
    den = den.to_floating().trimmed_relative(1e-15);
  }
  out.p_ = std::move(num);
  out.q_ = std::move(den);
  out.degree_ = d * e;
  normalize_pair(out.p_, out.q_);
  return out;
}

RationalMap iterate(const RationalMap& r, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "iterate needs n >= 1");
  RationalMap out = r;
  for (int i = 1; i < n; ++i) out = compose(r, out);
  return out;
}

SpherePoint evaluate(const RationalMap& r, const SpherePoint& x) {
  const int d = r.degree();
  Scalar a, b;
  if (x.is_infinity()) {
    a = r.numerator().coeff(d);
    b = r.denominator().coeff(d);
    if (!x.is_exact()) {
      a = a.to_floating();
      b = b.to_floating();
    }
  } else if (!x.is_exact() && x.value().abs() > 1.0) {
    // Evaluate (P(1, u) : Q(1, u)) with u = 1/z to avoid overflow.
    const Scalar u = Scalar::floating(1.0) / x.value();
    a = r.numerator().reversed(d).eval(u);
    b = r.denominator().reversed(d).eval(u);
  } else {
    a = r.numerator().eval(x.value());
    b = r.denominator().eval(x.value());
  }
  if (a.is_zero() && b.is_zero())
    throw Error(ErrorCode::IndeterminateEvaluation, "both homogeneous components vanish at " + x.to_string());
  if (!a.is_exact() || !b.is_exact()) {
    const double mag = std::max(a.abs(), b.abs());
    if (!(mag > 0.0)) throw Error(ErrorCode::IndeterminateEvaluation, "indeterminate evaluation at " + x.to_string());
  }
  return SpherePoint::homogeneous(a, b);
}

void evaluate_ld(const RationalMap& r, ComplexLD& z, ComplexLD& w) {
  const int d = r.degree();
  ComplexLD a = r.numerator().eval_homogeneous(z, w, d);
  ComplexLD b = r.denominator().eval_homogeneous(z, w, d);
  const long double n = std::sqrt(std::norm(a) + std::norm(b));
  if (!(n > 0.0L)) throw Error(ErrorCode::IndeterminateEvaluation, "indeterminate long double evaluation");
  z = a / n;
  w = b / n;
}

bool uses_inverse_chart(const SpherePoint& x) { return x.is_infinity() || !inside_unit_disk(x.value()); }

Scalar chart_coordinate(const SpherePoint& x) {
  if (x.is_infinity()) return x.is_exact() ? Scalar(0) : Scalar::floating(0.0);
  if (inside_unit_disk(x.value())) return x.value();
  const Scalar one = x.is_exact() ? Scalar(1) : Scalar::floating(1.0);
  return one / x.value();
}

LocalChart local_chart(const RationalMap& r, const SpherePoint& x) {
  const int d = r.degree();
  LocalChart c;
  if (uses_inverse_chart(x)) {
    c.num = r.numerator().reversed(d);
    c.den = r.denominator().reversed(d);
  } else {
    c.num = r.numerator();
    c.den = r.denominator();
  }
  if (!x.is_exact()) {
    c.num = c.num.to_floating();
    c.den = c.den.to_floating();
  }
  const SpherePoint y = evaluate(r, x);
  if (uses_inverse_chart(y)) std::swap(c.num, c.den);
  c.t0 = chart_coordinate(x);
  c.s0 = chart_coordinate(y);
  return c;
}

Scalar chart_derivative(const RationalMap& r, const SpherePoint& x) {
  const LocalChart c = local_chart(r, x);
  const Scalar n = c.num.eval(c.t0);
  const Scalar dn = c.num.derivative().eval(c.t0);
  const Scalar dd = c.den.eval(c.t0);
  const Scalar ddd = c.den.derivative().eval(c.t0);
  return (dn * dd - n * ddd) / (dd * dd);
}

int local_valency(const RationalMap& r, const SpherePoint& x) {
  const LocalChart c = local_chart(r, x);
  const Polynomial f = c.num - c.den * c.s0;
  const Polynomial g = f.taylor_shift(c.t0);
  const auto& k = g.coeffs();
  if (f.is_exact()) {
    for (std::size_t i = 1; i < k.size(); ++i)
      if (!k[i].is_zero()) return static_cast<int>(i);
    throw Error(ErrorCode::ValencyAmbiguous, "local map is constant at " + x.to_string());
  }
  double mx = 0.0;
  for (const auto& s : k) mx = std::max(mx, s.abs());
  if (!(mx > 0.0)) throw Error(ErrorCode::ValencyAmbiguous, "local map is constant at " + x.to_string());
  int first_gray = 0;
  for (std::size_t i = 1; i < k.size(); ++i) {
    const double rel = k[i].abs() / mx;
    if (rel > 1e-7) {
      if (first_gray != 0) {
        std::ostringstream os;
        os << "valency ambiguous at " << x.to_string() << ": " << first_gray << " or " << i;
        throw Error(ErrorCode::ValencyAmbiguous, os.str());
      }
      return static_cast<int>(i);
    }
    if (rel >= 1e-11 && first_gray == 0) first_gray = static_cast<int>(i);
  }
  throw Error(ErrorCode::ValencyAmbiguous, "no significant Taylor coefficient at " + x.to_string());
}

long long valency(const RationalMap& r, int n, const SpherePoint& x) {
  long long v = 1;
  SpherePoint p = x;
  for (int j = 0; j < n; ++j) {
    v *= local_valency(r, p);
    if (j + 1 < n) p = evaluate(r, p);
  }
  return v;
}

std::vector<Preimage> preimages(const RationalMap& r, const SpherePoint& y, const RootOptions& opt) {
  Scalar a, b;
  if (y.is_infinity()) {
    a = Scalar(1);
    b = Scalar(0);
  } else {
    a = y.value();
    b = Scalar(1);
  }
  Polynomial f = r.numerator() * b - r.denominator() * a;
  const bool exact = r.is_exact() && y.is_exact();
  if (!exact) f = f.to_floating().trimmed_relative(1e-13);
  if (f.is_zero()) throw Error(ErrorCode::IndeterminateEvaluation, "preimage equation vanishes identically");
  std::vector<Preimage> out;
  if (f.degree() >= 1)
    for (auto& root : find_roots(f, opt)) out.push_back({SpherePoint(root.value), root.multiplicity});
  const int at_inf = r.degree() - f.degree();
  if (at_inf > 0) out.push_back({SpherePoint::infinity(exact), at_inf});
  return out;
}

}  // namespace ratdyn
