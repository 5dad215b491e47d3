#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "ratdyn/report.hpp"

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

std::vector<std::optional<oracle::C>> opt_points(const std::vector<SpherePoint>& pts) {
  std::vector<std::optional<oracle::C>> out;
  for (const auto& p : pts) out.push_back(oracle::as_opt(p));
  return out;
}

std::vector<std::string> names(const ExposedOrbit& o) {
  std::vector<std::string> out;
  for (const auto& p : o.points) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("ro_related witnesses") {
  const RationalMap sq = map_of({"1", "0", "0"}, {"1"});
  const auto sc = critical_points(sq);
  auto w = ro_related(sq, pt("0"), pt("0"), 12, sc);
  REQUIRE(w);
  CHECK(w->n == 0);
  CHECK(w->m == 0);

  const RationalMap ch = map_of({"1", "0", "-2"}, {"1"});
  const auto cc = critical_points(ch);
  w = ro_related(ch, pt("-2"), pt("2"), 12, cc);
  REQUIRE(w);
  CHECK(w->n == 1);
  CHECK(w->m == 0);
  CHECK(w->valency == 1);

  // (0, 1) precedes (1, 0) in the (n + m, n) order.
  w = ro_related(sq, pt("1"), pt("-1"), 12, sc);
  REQUIRE(w);
  CHECK(w->n == 0);
  CHECK(w->m == 1);

  CHECK_FALSE(ro_related(sq, pt("0"), pt("1"), 12, sc));
  // 0 maps to -2 but the valency of R at 0 is 2, while at 2 it is 1.
  CHECK_FALSE(ro_related(ch, pt("0"), pt("-2"), 12, cc).has_value());
}

TEST_CASE("ro_related along regular orbits") {
  std::mt19937_64 rng(5);
  const auto maps = corpus::maps(10, 77);
  for (const auto& r : maps) {
    const auto crit = critical_points(r);
    const SpherePoint x = corpus::random_point(rng);
    SpherePoint y = x;
    for (int k = 0; k < 2; ++k) y = step_point(r, y);
    auto w = ro_related(r, y, x, 4, crit);
    REQUIRE(w);
    CHECK(w->n + w->m <= 2);
  }
}

TEST_CASE("four1 check agrees with brute force") {
  const RationalMap ch = map_of({"1", "0", "-2"}, {"1"});
  const auto m = oracle::of(ch);
  const std::vector<std::vector<SpherePoint>> sets = {{pt("2")}, {pt("-2"), pt("2")}, {pt("inf")}, {pt("0")}};
  for (const auto& s : sets) CHECK(satisfies_four1(ch, s, 1e-7) == oracle::four1(m, opt_points(s)));
  CHECK_FALSE(satisfies_four1(ch, {pt("2")}, 1e-7));
  CHECK(satisfies_four1(ch, {pt("-2"), pt("2")}, 1e-7));
}

TEST_CASE("exposed orbits of the worked examples") {
  const Analysis ch = run_analysis(map_of({"1", "0", "-2"}, {"1"}), AnalysisConfig{});
  REQUIRE(ch.exposed.orbits.size() == 2);
  CHECK(names(ch.exposed.orbits[0]) == std::vector<std::string>{"inf"});
  CHECK(ch.exposed.orbits[0].type == 2);
  CHECK(ch.exposed.orbits[0].membership == Membership::Fatou);
  CHECK(names(ch.exposed.orbits[1]) == std::vector<std::string>{"-2", "2"});
  CHECK(ch.exposed.orbits[1].type == 1);
  CHECK(ch.exposed.orbits[1].membership == Membership::Julia);

  const Analysis rees = run_analysis(map_of({"1", "-4", "4"}, {"1", "0", "0"}), AnalysisConfig{});
  REQUIRE(rees.exposed.orbits.size() == 2);
  CHECK(names(rees.exposed.orbits[0]) == std::vector<std::string>{"0"});
  CHECK(rees.exposed.orbits[0].type == 2);
  REQUIRE(rees.exposed.orbits[0].asymptotic_valency);
  CHECK(rees.exposed.orbits[0].asymptotic_valency->value == 2);
  CHECK(names(rees.exposed.orbits[1]) == std::vector<std::string>{"1", "inf"});
  CHECK(rees.exposed.orbits[1].type == 1);
  CHECK(rees.julia.in_julia.size() == 2);
  CHECK(rees.julia.in_fatou.empty());

  for (const Analysis* a : {&ch, &rees}) {
    const auto m = oracle::of(a->map);
    CHECK(oracle::four1(m, opt_points(a->exposed.union_points)));
    for (const auto& o : a->exposed.orbits) {
      CHECK(oracle::four1(m, opt_points(o.points)));
      // every pair inside an orbit is RO-related
      for (const auto& x : o.points)
        for (const auto& y : o.points) CHECK(ro_related(a->map, x, y, 12, a->crit).has_value());
    }
  }
}

TEST_CASE("exposed orbits of z^2 and z^2 - 1/2") {
  const Analysis sq = run_analysis(map_of({"1", "0", "0"}, {"1"}), AnalysisConfig{});
  REQUIRE(sq.exposed.orbits.size() == 2);
  for (const auto& o : sq.exposed.orbits) {
    CHECK(o.type == 2);
    CHECK(o.membership == Membership::Fatou);
    CHECK(o.asymptotic_valency->infinite);
  }
  const Analysis att = run_analysis(map_of({"1", "0", "-1/2"}, {"1"}), AnalysisConfig{});
  REQUIRE(att.exposed.orbits.size() == 1);
  CHECK(att.exposed.orbits[0].points[0].is_infinity());
  CHECK(oracle::four1(oracle::of(att.map), opt_points(att.exposed.union_points)));
}

TEST_CASE("exposed search reports its bounds") {
  AnalysisConfig cfg;
  cfg.preimage_depth = 3;
  cfg.ro_depth = 5;
  const Analysis a = run_analysis(map_of({"1", "0", "-2"}, {"1"}), cfg);
  CHECK(a.exposed.preimage_depth == 3);
  CHECK(a.exposed.forward_depth == 5);
  CHECK(a.exposed.max_seed_period == a.cycles.scanned_max_period);
  CHECK_FALSE(a.exposed.seeds.empty());
}

TEST_CASE("julia partition blocks on undetermined membership") {
  ExposedOrbit a, b;
  a.points = {pt("1")};
  a.membership = Membership::Julia;
  b.points = {pt("2")};
  b.membership = Membership::Fatou;
  auto p = julia_exposed_partition({a, b});
  CHECK_FALSE(p.blocked);
  CHECK(p.in_julia.size() == 1);
  CHECK(p.in_fatou.size() == 1);
  b.membership = Membership::Undetermined;
  p = julia_exposed_partition({a, b});
  CHECK(p.blocked);
  CHECK_FALSE(p.obstruction.empty());
}
