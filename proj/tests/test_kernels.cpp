#include <doctest.h>

#include <cstring>
#include <random>

#include "oracles.hpp"
#include "ratdyn/kernels.hpp"
#include "ratdyn/render.hpp"

using namespace ratdyn;
using namespace ratdyn::kernels;

namespace {

struct IsaGuard {
  ~IsaGuard() { reset_isa(); }
};

struct HornerData {
  std::vector<double> cr, ci, zr, zi;
  std::vector<double> pr, pi, dr, di;
  void run() {
    const std::size_t n = zr.size();
    pr.assign(n, 0);
    pi.assign(n, 0);
    dr.assign(n, 0);
    di.assign(n, 0);
    horner_eval({cr, ci, zr, zi, pr, pi, dr, di});
  }
};

HornerData random_horner(std::mt19937_64& rng, std::size_t deg, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  HornerData h;
  for (std::size_t k = 0; k <= deg; ++k) {
    h.cr.push_back(g(rng));
    h.ci.push_back(g(rng));
  }
  for (std::size_t i = 0; i < n; ++i) {
    h.zr.push_back(g(rng));
    h.zi.push_back(g(rng));
  }
  return h;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("isa names and forcing") {
  IsaGuard guard;
  CHECK(std::string(isa_name(Isa::Scalar)) == "scalar");
  CHECK(isa_supported(Isa::Scalar));
  force_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  if (!isa_supported(Isa::Avx2)) CHECK_THROWS(force_isa(Isa::Avx2));
}

TEST_CASE("horner kernel matches the oracle") {
  IsaGuard guard;
  std::mt19937_64 rng(1);
  HornerData h = random_horner(rng, 7, 37);
  h.run();
  std::vector<oracle::C> c;
  for (std::size_t k = 0; k < h.cr.size(); ++k) c.emplace_back(h.cr[k], h.ci[k]);
  const auto dc = oracle::derivative(c);
  for (std::size_t i = 0; i < h.zr.size(); ++i) {
    const oracle::C z(h.zr[i], h.zi[i]);
    const oracle::C p = oracle::horner(c, z), dp = oracle::horner(dc, z);
    CHECK(std::abs(oracle::C(h.pr[i], h.pi[i]) - p) <= 1e-12L * (1 + std::abs(p)));
    CHECK(std::abs(oracle::C(h.dr[i], h.di[i]) - dp) <= 1e-12L * (1 + std::abs(dp)));
  }
}

TEST_CASE("horner scalar and avx2 are bit-identical") {
  IsaGuard guard;
  if (!isa_supported(Isa::Avx2)) {
    MESSAGE("AVX2 not available; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(2);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 1001u}) {
    for (std::size_t deg : {0u, 1u, 2u, 6u, 13u}) {
      HornerData a = random_horner(rng, deg, n);
      HornerData b = a;
      force_isa(Isa::Scalar);
      a.run();
      force_isa(Isa::Avx2);
      b.run();
      CHECK(same_bits(a.pr, b.pr));
      CHECK(same_bits(a.pi, b.pi));
      CHECK(same_bits(a.dr, b.dr));
      CHECK(same_bits(a.di, b.di));
    }
  }
}

TEST_CASE("attraction time scalar and avx2 are bit-identical") {
  IsaGuard guard;
  if (!isa_supported(Isa::Avx2)) {
    MESSAGE("AVX2 not available; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 1.5);
  for (int deg : {2, 3, 5}) {
    HomogeneousMap m;
    m.degree = deg;
    for (int k = 0; k <= deg; ++k) {
      m.p_re.push_back(g(rng));
      m.p_im.push_back(g(rng));
      m.q_re.push_back(k == 0 ? 1.0 : 0.3 * g(rng));
      m.q_im.push_back(k == 0 ? 0.0 : 0.3 * g(rng));
    }
    std::vector<Attractor> att{{0.0, 0.0, 1.0, 0.0}, {1.0, 0.0, 0.0, 0.0}, {0.6, 0.0, 0.8, 0.0}};
    std::vector<double> zr, zi;
    for (int i = 0; i < 203; ++i) {
      zr.push_back(g(rng));
      zi.push_back(g(rng));
    }
    std::vector<std::int32_t> a(zr.size()), b(zr.size());
    AttractionBatch batch{&m, att, zr, zi, 40, 1e-3, a};
    force_isa(Isa::Scalar);
    attraction_time(batch);
    batch.out = b;
    force_isa(Isa::Avx2);
    attraction_time(batch);
    CHECK(a == b);
  }
}

TEST_CASE("attraction time counts iterations to the attractor") {
  IsaGuard guard;
  // z^2 with attractors 0 and inf; |z0| = 0.5 reaches chordal 1e-3 of 0 when 0.5^(2^k) < 1e-3.
  HomogeneousMap m;
  m.degree = 2;
  m.p_re = {0, 0, 1};
  m.p_im = {0, 0, 0};
  m.q_re = {1, 0, 0};
  m.q_im = {0, 0, 0};
  std::vector<Attractor> att{{0.0, 0.0, 1.0, 0.0}};
  std::vector<double> zr{0.5, 1.0}, zi{0.0, 0.0};
  std::vector<std::int32_t> out(2);
  attraction_time({&m, att, zr, zi, 20, 1e-3, out});
  int k = 0;
  double z = 0.5;
  while (z / std::sqrt(1 + z * z) >= 1e-3) {
    z = z * z;
    ++k;
  }
  CHECK(out[0] == k);
  CHECK(out[1] == 20);
}
