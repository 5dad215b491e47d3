#include <doctest.h>

#include "ratdyn/errors.hpp"
#include "ratdyn/report.hpp"

using namespace ratdyn;
using Kind = IsotropyGroup::Kind;

namespace {

Polynomial poly(std::initializer_list<const char*> highest_first) {
  std::vector<Scalar> c;
  for (const char* s : highest_first) c.push_back(Scalar::parse(s));
  return Polynomial::from_highest_first(c);
}
RationalMap map_of(std::initializer_list<const char*> p, std::initializer_list<const char*> q) {
  return RationalMap(poly(p), poly(q));
}

int count(const PrimitiveCatalog& c, CoSupport s) {
  int n = 0;
  for (const auto& e : c.entries) n += e.co_support == s;
  return n;
}

}  // namespace

TEST_CASE("isotropy groups of the worked examples") {
  // z^2, critical point 0 fixed: lands on a critical cycle.
  PointContext sq0{true, true, true, true, AsymptoticValency{true, 0}};
  CHECK(isotropy_of(sq0).kind == Kind::SubgroupOfQmodZ);
  CHECK(isotropy_of(sq0).dual_class() == "cantor");

  // z^2 - 1/2, critical point 0 converges to an attracting point.
  PointContext att0{true, false, false, std::nullopt, AsymptoticValency{false, 2}};
  CHECK(isotropy_of(att0) == IsotropyGroup{Kind::FiniteCyclic, 2});
  CHECK(isotropy_of(att0).to_string() == "Z_2");

  // Chebyshev, 2 is a repelling fixed point; -2 is strictly pre-periodic.
  CHECK(isotropy_of(PointContext{false, true, {}, {}, {}}).kind == Kind::Z);
  CHECK(isotropy_of(PointContext{false, false, {}, {}, {}}).kind == Kind::Trivial);

  // (z-2)^2/z^2, critical point 0 lands on the repelling point 1.
  PointContext rees0{true, false, true, false, AsymptoticValency{false, 2}};
  const IsotropyGroup g = isotropy_of(rees0);
  CHECK(g == IsotropyGroup{Kind::ZPlusFiniteCyclic, 2});
  CHECK(g.dual_class() == "circle x 2");
  CHECK(algebra::to_ascii(algebra::normalize(g.group_algebra())) == "C(T) (+) C(T)");
}

TEST_CASE("isotropy with missing context") {
  CHECK_THROWS_AS(isotropy_of(PointContext{}), Error);
  CHECK_THROWS_AS(isotropy_of(PointContext{false, std::nullopt, {}, {}, {}}), Error);
  CHECK_THROWS_AS(isotropy_of(PointContext{true, false, true, std::nullopt, AsymptoticValency{false, 2}}), Error);
  CHECK_THROWS_AS(isotropy_of(PointContext{true, false, false, std::nullopt, std::nullopt}), Error);
  try {
    isotropy_of(PointContext{});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnresolvedContext);
  }
}

TEST_CASE("catalog of the Chebyshev map") {
  const Analysis a = run_analysis(map_of({"1", "0", "-2"}, {"1"}), AnalysisConfig{});
  const auto& c = a.catalog;
  CHECK(c.t0 == T0Verdict::NonT0);
  CHECK(count(c, CoSupport::Julia) == 1);
  CHECK(count(c, CoSupport::ExposedOrbit) == 2);
  CHECK(count(c, CoSupport::ClosureOfFreeOrbit) == static_cast<int>(a.atlas.regions.size()));
  for (const auto& e : c.entries) {
    if (e.co_support == CoSupport::Julia) CHECK_FALSE(e.simple);
    if (e.co_support != CoSupport::ExposedOrbit) continue;
    REQUIRE(e.quotient);
    CHECK(e.simple);
    CHECK(e.quotient->kind == (e.description == "RO{inf}" ? algebra::Kind::Scalars : algebra::Kind::Matrix));
  }
}

TEST_CASE("catalog of z^2 - 1/2 includes the attracting-point class") {
  const Analysis a = run_analysis(map_of({"1", "0", "-1/2"}, {"1"}), AnalysisConfig{});
  CHECK(count(a.catalog, CoSupport::OrbitPlusJulia) == 2);
  for (const auto& e : a.catalog.entries)
    if (e.co_support == CoSupport::OrbitPlusJulia) CHECK(e.quotient_rows.size() == 2);
  const Analysis sq = run_analysis(map_of({"1", "0", "0"}, {"1"}), AnalysisConfig{});
  for (const auto& e : sq.catalog.entries)
    if (e.co_support == CoSupport::Julia) CHECK(e.simple);
}

TEST_CASE("T0 verdict when the Julia set is the sphere") {
  // Synthetic input: one repelling fixed point, both critical points land on it.
  CycleScan cycles;
  PeriodicCycle p;
  p.id = 0;
  p.points = {SpherePoint::parse("1")};
  p.multiplier = Scalar(-4);
  p.kind = CycleKind::Repelling;
  cycles.cycles.push_back(p);
  std::vector<CriticalPoint> crit{{SpherePoint::parse("0"), 2, 1}, {SpherePoint::parse("2"), 2, 1}};
  OrbitFate f;
  f.kind = FateKind::PreperiodicExactlyAt;
  f.cycle_id = 0;
  f.step = 2;
  std::vector<OrbitFate> fates{f, f};
  const Atlas atlas;
  const ExposedScan exposed;
  const JuliaPartition part;
  const Decomposition dec = full_decomposition(atlas, julia_extension(part));
  const PrimitiveCatalog c = primitive_catalog({atlas, exposed, part, dec, cycles, crit, fates});
  CHECK(c.julia_is_sphere);
  CHECK(c.t0 == T0Verdict::T0);
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].simple);

  // One critical point converging instead: J is not known to be the sphere.
  fates[1].kind = FateKind::ConvergesToCycle;
  const PrimitiveCatalog u = primitive_catalog({atlas, exposed, part, dec, cycles, crit, fates});
  CHECK_FALSE(u.julia_is_sphere);
  CHECK(u.t0 == T0Verdict::Undetermined);
}

TEST_CASE("Lattes map: sphere Julia set with an exposed orbit") {
  const Analysis a = run_analysis(map_of({"1", "0", "2", "0", "1"}, {"4", "0", "-4", "0"}), AnalysisConfig{});
  REQUIRE(a.exposed.orbits.size() == 1);
  CHECK(a.exposed.orbits[0].size() == 4);
  CHECK(a.exposed.orbits[0].type == 1);
  CHECK(a.catalog.julia_is_sphere);
  CHECK(a.catalog.t0 == T0Verdict::NonT0);
  CHECK(a.catalog.simple_quotients == std::vector<std::string>{"M_4"});
}
