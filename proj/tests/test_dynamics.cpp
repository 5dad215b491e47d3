#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "ratdyn/dynamics.hpp"
#include "ratdyn/errors.hpp"

using namespace ratdyn;

namespace {

Polynomial poly(std::initializer_list<const char*> highest_first) {
  std::vector<Scalar> c;
  for (const char* s : highest_first) c.push_back(Scalar::parse(s));
  return Polynomial::from_highest_first(c);
}
RationalMap map_of(std::initializer_list<const char*> p, std::initializer_list<const char*> q) {
  return RationalMap(poly(p), poly(q));
}
SpherePoint pt(const char* s) { return SpherePoint::parse(s); }

const PeriodicCycle* find_cycle(const CycleScan& s, const SpherePoint& p) {
  for (const auto& c : s.cycles)
    for (const auto& q : c.points)
      if (same_point(p, q, 1e-9)) return &c;
  return nullptr;
}

std::vector<oracle::C> mul(const std::vector<oracle::C>& a, const std::vector<oracle::C>& b) {
  std::vector<oracle::C> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("critical points of the worked examples") {
  auto c1 = critical_points(map_of({"1", "0", "-2"}, {"1"}));
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].point.exactly_equal(pt("0")));
  CHECK(c1[0].valency == 2);
  CHECK(c1[1].point.is_infinity());
  CHECK(c1[1].valency == 2);

  // Oracle: P'Q - PQ' by coefficient arithmetic, roots by Durand-Kerner.
  const RationalMap r = map_of({"1", "-4", "4"}, {"1", "0", "0"});
  const auto m = oracle::of(r);
  auto a = mul(oracle::derivative(m.p), m.q), b = mul(m.p, oracle::derivative(m.q));
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  while (std::abs(a.back()) == 0) a.pop_back();
  const auto roots = oracle::durand_kerner(a);
  auto c2 = critical_points(r);
  REQUIRE(c2.size() == roots.size());
  for (const auto& z : roots) {
    bool found = false;
    for (const auto& c : c2)
      if (!c.point.is_infinity() && std::abs(c.point.value().to_complex_ld() - z) < 1e-9L && c.valency == 2) found = true;
    CHECK(found);
  }
  for (const auto& c : c2) CHECK(c.point.is_exact());

  auto c3 = critical_points(map_of({"1", "0", "0", "0"}, {"1"}));
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].valency == 3);
  CHECK(c3[1].valency == 3);
}

TEST_CASE("critical multiplicities sum to 2d - 2") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const RationalMap r = corpus::random_map(rng, 2 + t % 5);
    int sum = 0;
    for (const auto& c : critical_points(r)) sum += c.valency - 1;
    CHECK(sum == 2 * r.degree() - 2);
  }
}

TEST_CASE("fixed points and multipliers") {
  DynamicsOptions opt;
  opt.max_period = 1;
  const RationalMap sq = map_of({"1", "0", "0"}, {"1"});
  auto s = periodic_cycles(sq, critical_points(sq), opt);
  REQUIRE(s.cycles.size() == 3);
  CHECK(find_cycle(s, pt("0"))->kind == CycleKind::SuperAttracting);
  CHECK(find_cycle(s, pt("inf"))->kind == CycleKind::SuperAttracting);
  CHECK(find_cycle(s, pt("1"))->kind == CycleKind::Repelling);
  CHECK(find_cycle(s, pt("1"))->multiplier.identical(Scalar(2)));

  // Chebyshev: fixed points from the quadratic formula on z^2 - z - 2, multiplier 2z.
  const RationalMap ch = map_of({"1", "0", "-2"}, {"1"});
  auto t = periodic_cycles(ch, critical_points(ch), opt);
  CHECK(t.fixed_point_count == 3);
  for (long double sign : {1.0L, -1.0L}) {
    const long double z = (1 + sign * std::sqrt(9.0L)) / 2;
    const SpherePoint p(Scalar::floating(static_cast<double>(z)));
    const PeriodicCycle* c = find_cycle(t, p);
    REQUIRE(c != nullptr);
    CHECK(c->kind == CycleKind::Repelling);
    CHECK(std::abs(c->multiplier.to_complex_ld() - 2 * z) < 1e-9L);
  }
  CHECK(find_cycle(t, pt("inf"))->kind == CycleKind::SuperAttracting);
}

TEST_CASE("superattracting two-cycle of z^2 - 1") {
  const RationalMap r = map_of({"1", "0", "-1"}, {"1"});
  DynamicsOptions opt;
  opt.max_period = 2;
  auto s = periodic_cycles(r, critical_points(r), opt);
  // Oracle: direct iteration 0 -> -1 -> 0.
  const auto m = oracle::of(r);
  const auto y = oracle::eval(m, oracle::C(0));
  REQUIRE(y.has_value());
  CHECK(std::abs(*oracle::eval(m, *y)) == 0);
  const PeriodicCycle* c = find_cycle(s, pt("0"));
  REQUIRE(c != nullptr);
  CHECK(c->period == 2);
  CHECK(c->contains_critical);
  CHECK(c->multiplier.is_zero());
  CHECK(c->kind == CycleKind::SuperAttracting);
  CHECK(same_point(c->points[0], SpherePoint(Scalar::floating(static_cast<double>(y->real()))), 1e-12));
}

TEST_CASE("fixed point count is d + 1") {
  std::mt19937_64 rng(23);
  DynamicsOptions opt;
  opt.max_period = 1;
  for (int t = 0; t < 30; ++t) {
    const RationalMap r = corpus::random_map(rng, 2 + t % 5);
    CHECK(periodic_cycles(r, critical_points(r), opt).fixed_point_count == r.degree() + 1);
  }
}

TEST_CASE("multiplier classification bands") {
  int order = 0;
  double rot = 0;
  bool band = false;
  CHECK(classify_multiplier(Scalar(0), true, order, rot, band) == CycleKind::SuperAttracting);
  CHECK(classify_multiplier(Scalar::parse("1/2"), false, order, rot, band) == CycleKind::Attracting);
  CHECK(classify_multiplier(Scalar::parse("3"), false, order, rot, band) == CycleKind::Repelling);
  CHECK(classify_multiplier(Scalar::parse("-1"), false, order, rot, band) == CycleKind::RationallyIndifferent);
  CHECK(order == 2);
  CHECK(classify_multiplier(Scalar::parse("i"), false, order, rot, band) == CycleKind::RationallyIndifferent);
  CHECK(order == 4);
  const double theta = (std::sqrt(5.0) - 1) / 2;
  const Scalar golden = Scalar::floating(std::polar(1.0, 2 * std::numbers::pi * theta));
  CHECK(classify_multiplier(golden, false, order, rot, band) == CycleKind::IrrationallyIndifferent);
  CHECK(rot == doctest::Approx(theta).epsilon(1e-12));
  band = false;
  CHECK(classify_multiplier(Scalar::floating(1.0 + 1e-8), false, order, rot, band) == CycleKind::Ambiguous);
  CHECK(band);
}

TEST_CASE("orbit fates") {
  DynamicsOptions opt;
  const RationalMap ch = map_of({"1", "0", "-2"}, {"1"});
  const auto chc = critical_points(ch);
  const auto chs = periodic_cycles(ch, chc, opt);
  OrbitFate f = orbit_fate(ch, pt("-2"), chs.cycles, chc, opt);
  CHECK(f.kind == FateKind::PreperiodicExactlyAt);
  CHECK(f.step == 1);
  CHECK(find_cycle(chs, pt("2"))->id == f.cycle_id);

  // identity case
  OrbitFate g = orbit_fate(ch, pt("2"), chs.cycles, chc, opt);
  CHECK(g.kind == FateKind::PreperiodicExactlyAt);
  CHECK(g.step == 0);

  const RationalMap rees = map_of({"1", "-4", "4"}, {"1", "0", "0"});
  const auto rc = critical_points(rees);
  const auto rs = periodic_cycles(rees, rc, opt);
  OrbitFate h = orbit_fate(rees, pt("0"), rs.cycles, rc, opt);
  CHECK(h.kind == FateKind::PreperiodicExactlyAt);
  CHECK(h.step == 2);
  CHECK(find_cycle(rs, pt("1"))->id == h.cycle_id);
  CHECK(asymptotic_valency(h, rs.cycles).value == 2);
  CHECK_FALSE(asymptotic_valency(h, rs.cycles).infinite);

  // z^2 - 1/2: oracle = 100 steps of direct iteration from 0.
  const RationalMap att = map_of({"1", "0", "-1/2"}, {"1"});
  const auto ac = critical_points(att);
  const auto as = periodic_cycles(att, ac, opt);
  OrbitFate k = orbit_fate(att, pt("0"), as.cycles, ac, opt);
  long double z = 0;
  for (int i = 0; i < 100; ++i) z = z * z - 0.5L;
  CHECK(k.kind == FateKind::ConvergesToCycle);
  const PeriodicCycle* target = find_cycle(as, SpherePoint(Scalar::floating(static_cast<double>(z))));
  REQUIRE(target != nullptr);
  CHECK(target->id == k.cycle_id);
  CHECK(target->kind == CycleKind::Attracting);
  CHECK(std::abs(target->multiplier.to_complex_ld() - 2 * z) < 1e-9L);

  const RationalMap sq = map_of({"1", "0", "0"}, {"1"});
  const auto sc = critical_points(sq);
  const auto ss = periodic_cycles(sq, sc, opt);
  CHECK(asymptotic_valency(orbit_fate(sq, pt("0"), ss.cycles, sc, opt), ss.cycles).infinite);
}

TEST_CASE("asymptotic valency of a regular orbit") {
  DynamicsOptions opt;
  const RationalMap ch = map_of({"1", "0", "-2"}, {"1"});
  const auto c = critical_points(ch);
  const auto s = periodic_cycles(ch, c, opt);
  const OrbitFate f = orbit_fate(ch, pt("3"), s.cycles, c, opt);
  // Oracle: iterate 3 and test against the critical set {0, inf} before escape.
  long double z = 3;
  bool meets = false;
  for (int i = 0; i < 6; ++i) {
    if (z == 0) meets = true;
    z = z * z - 2;
  }
  CHECK_FALSE(meets);
  CHECK(asymptotic_valency(f, s.cycles).value == 1);
}

TEST_CASE("parabolic convergence and budget exhaustion") {
  const RationalMap r = map_of({"1", "0", "1/4"}, {"1"});
  DynamicsOptions opt;
  opt.max_period = 1;
  const auto c = critical_points(r);
  const auto s = periodic_cycles(r, c, opt);
  const PeriodicCycle* p = find_cycle(s, pt("1/2"));
  REQUIRE(p != nullptr);
  CHECK(p->kind == CycleKind::RationallyIndifferent);
  CHECK(p->fixed_point_multiplicity == 2);
  CHECK(orbit_fate(r, pt("0"), s.cycles, c, opt).kind == FateKind::ConvergesToCycle);
  opt.orbit_budget = 50;
  const OrbitFate f = orbit_fate(r, pt("0"), s.cycles, c, opt);
  CHECK(f.kind == FateKind::Unresolved);
  CHECK_THROWS_AS(asymptotic_valency(f, s.cycles), Error);
}

TEST_CASE("periodic scan respects the degree cap") {
  const RationalMap r = map_of({"1", "0", "0", "0", "1"}, {"1"});
  DynamicsOptions opt;
  opt.max_period = 4;
  opt.root_degree_cap = 20;
  const auto s = periodic_cycles(r, critical_points(r), opt);
  CHECK(s.requested_max_period == 4);
  CHECK(s.scanned_max_period == 2);
  bool warned = false;
  for (const auto& w : s.warnings)
    if (w.rfind("W_PERIOD_TRUNCATED", 0) == 0) warned = true;
  CHECK(warned);
}
