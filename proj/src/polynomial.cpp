#include "ratdyn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ratdyn/errors.hpp"

namespace ratdyn {

Polynomial::Polynomial(std::vector<Scalar> lowest_first) : coeffs_(std::move(lowest_first)) {
  trim();
}

Polynomial Polynomial::from_highest_first(std::span<const Scalar> coeffs) {
  std::vector<Scalar> c(coeffs.rbegin(), coeffs.rend());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(const Scalar& c, int degree) {
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_exact(); });
}

std::vector<Scalar> Polynomial::highest_first() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

Scalar Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Complex Polynomial::eval(Complex x) const {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

ComplexLD Polynomial::eval(ComplexLD x) const {
  ComplexLD acc(0.0L, 0.0L);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex_ld();
  return acc;
}

Scalar Polynomial::eval_homogeneous(const Scalar& z, const Scalar& w, int deg) const {
  if (w.is_one()) return eval(z);
  std::vector<Scalar> wp(static_cast<std::size_t>(deg) + 1, Scalar(1));
  for (int k = 1; k <= deg; ++k) wp[static_cast<std::size_t>(k)] = wp[static_cast<std::size_t>(k) - 1] * w;
  Scalar total(0);
  Scalar zp(1);
  for (int k = 0; k <= deg; ++k) {
    Scalar c = coeff(k);
    if (!c.is_zero()) total += c * zp * wp[static_cast<std::size_t>(deg - k)];
    if (k < deg) zp *= z;
  }
  return total;
}

ComplexLD Polynomial::eval_homogeneous(ComplexLD z, ComplexLD w, int deg) const {
  ComplexLD total(0.0L, 0.0L);
  ComplexLD zp(1.0L, 0.0L);
  std::vector<ComplexLD> wp(static_cast<std::size_t>(deg) + 1, ComplexLD(1.0L, 0.0L));
  for (int k = 1; k <= deg; ++k) wp[static_cast<std::size_t>(k)] = wp[static_cast<std::size_t>(k) - 1] * w;
  for (int k = 0; k <= deg; ++k) {
    total += coeff(k).to_complex_ld() * zp * wp[static_cast<std::size_t>(deg - k)];
    zp *= z;
  }
  return total;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Scalar(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::taylor_shift(const Scalar& a) const {
  // Repeated synthetic division.
  std::vector<Scalar> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k-- > i;) c[k] += a * c[k + 1];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::reversed(int deg) const {
  std::vector<Scalar> c(static_cast<std::size_t>(deg) + 1, Scalar(0));
  for (int k = 0; k <= degree(); ++k) c[static_cast<std::size_t>(deg - k)] = coeffs_[static_cast<std::size_t>(k)];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::to_floating() const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x.to_floating());
  return Polynomial(std::move(c));
}

std::vector<Complex> Polynomial::to_complex() const {
  std::vector<Complex> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x.to_complex());
  return c;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Scalar lc = leading();
  if (lc.is_one()) return *this;
  std::vector<Scalar> c = coeffs_;
  for (auto& x : c) x /= lc;
  c.back() = lc.is_exact() ? Scalar(1) : Scalar::floating(1.0);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::trimmed_relative(double eps) const {
  if (is_exact() || is_zero()) return *this;
  double mx = 0.0;
  for (const auto& c : coeffs_) mx = std::max(mx, c.abs());
  std::vector<Scalar> c = coeffs_;
  while (!c.empty() && c.back().abs() <= eps * mx) c.pop_back();
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

bool Polynomial::identical(const Polynomial& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].identical(o.coeffs_[k])) return false;
  return true;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> r = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial{}, a};
  std::vector<Scalar> q(static_cast<std::size_t>(da - db) + 1, Scalar(0));
  const Scalar& lb = b.leading();
  for (int k = da - db; k >= 0; --k) {
    Scalar t = r[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(k + db)] = Scalar(0);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd_exact(Polynomial a, Polynomial b) {
  if (!a.is_exact() || !b.is_exact()) throw Error(ErrorCode::InvalidInput, "gcd_exact requires exact input");
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    // Keeping the remainder monic bounds coefficient growth in practice.
    b = r.monic();
  }
  return a.monic();
}

namespace {

// Arithmetic in Z/pZ for primes p = 1 mod 4, where i maps to a square root of -1.
using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 reduce(const mpz_class& z, u64 p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

int degree_mod(const std::vector<u64>& v) {
  int d = static_cast<int>(v.size()) - 1;
  while (d >= 0 && v[static_cast<std::size_t>(d)] == 0) --d;
  return d;
}

// Degree of gcd(a, b) over Z/pZ.
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  int da = degree_mod(a), db = degree_mod(b);
  while (db >= 0) {
    const u64 inv = powmod(b[static_cast<std::size_t>(db)], p - 2, p);
    while (da >= db) {
      const u64 t = mulmod(a[static_cast<std::size_t>(da)], inv, p);
      for (int j = 0; j <= db; ++j) {
        u64& x = a[static_cast<std::size_t>(da - db + j)];
        x = (x + p - mulmod(t, b[static_cast<std::size_t>(j)], p)) % p;
      }
      da = degree_mod(a);
    }
    std::swap(a, b);
    std::swap(da, db);
  }
  return da;
}

// True when a reduction modulo some prime certifies gcd(f, f') = 1. False
// means "not certified", not "has a repeated factor".
bool certified_squarefree(const Polynomial& f) {
  const int n = f.degree();
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re_q().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im_q().get_den_mpz_t());
  }
  std::vector<mpz_class> re, im;
  for (const auto& c : f.coeffs()) {
    re.push_back(mpz_class(c.re_q() * den));
    im.push_back(mpz_class(c.im_q() * den));
  }
  for (u64 p : {1000000009ULL, 998244353ULL, 2147483029ULL}) {
    u64 s = 0;
    for (u64 g = 2; s == 0; ++g)
      if (powmod(g, (p - 1) / 2, p) == p - 1) s = powmod(g, (p - 1) / 4, p);
    std::vector<u64> fp(static_cast<std::size_t>(n) + 1), dp(static_cast<std::size_t>(n));
    for (int k = 0; k <= n; ++k)
      fp[static_cast<std::size_t>(k)] = (reduce(re[static_cast<std::size_t>(k)], p) +
                                         mulmod(reduce(im[static_cast<std::size_t>(k)], p), s, p)) % p;
    // Degrees of f and f' must survive the reduction.
    if (fp[static_cast<std::size_t>(n)] == 0 || static_cast<u64>(n) % p == 0) continue;
    for (int k = 1; k <= n; ++k)
      dp[static_cast<std::size_t>(k - 1)] = mulmod(fp[static_cast<std::size_t>(k)], static_cast<u64>(k), p);
    if (gcd_degree_mod(fp, dp, p) == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  Polynomial f = p.monic();
  if (p.degree() == 1 || (f.is_exact() && certified_squarefree(f))) return {{f, 1}};
  Polynomial df = f.derivative();
  Polynomial a = gcd_exact(f, df);
  Polynomial b = divmod(f, a).quotient;
  Polynomial c = divmod(df, a).quotient;
  Polynomial d = c - b.derivative();
  int k = 1;
  while (b.degree() >= 1) {
    Polynomial g = gcd_exact(b, d);
    if (g.degree() >= 1) out.push_back({g.monic(), k});
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

}  // namespace ratdyn
