#include "ratdyn/fatou_atlas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ratdyn/errors.hpp"

namespace ratdyn {

namespace {

constexpr double kAnchorTol = 1e-6;

int type_rank(RegionType t) { return static_cast<int>(t); }

const PeriodicCycle* cycle_by_id(const CycleScan& cycles, int id) {
  for (const auto& c : cycles.cycles)
    if (c.id == id) return &c;
  return nullptr;
}

bool anchor_matches(const PeriodicCycle& c, const SpherePoint& anchor) {
  for (const auto& p : c.points)
    if (same_point(p, anchor, kAnchorTol)) return true;
  return false;
}

}  // namespace

const char* to_string(RegionType t) {
  switch (t) {
    case RegionType::SuperAttracting: return "super_attracting";
    case RegionType::Attracting: return "attracting";
    case RegionType::Parabolic: return "parabolic";
    case RegionType::Siegel: return "siegel";
    case RegionType::Herman: return "herman";
  }
  return "?";
}

int exposed_size_of(const SpherePoint& x, const ExposedScan& exposed, double tol) {
  for (const auto& o : exposed.orbits)
    for (const auto& p : o.points)
      if (coincide(p, x, tol) == Coincidence::Equal) return o.size();
  return 0;
}

std::vector<int> declared_siegel_cycles(const CycleScan& cycles, const std::vector<Declaration>& declarations,
                                        double /*tol*/) {
  std::vector<int> out;
  for (const auto& d : declarations) {
    if (d.kind != Declaration::Kind::Siegel || !d.anchor) continue;
    for (const auto& c : cycles.cycles)
      if (c.kind == CycleKind::IrrationallyIndifferent && anchor_matches(c, *d.anchor)) out.push_back(c.id);
  }
  return out;
}

Atlas build_atlas(const RationalMap& r, const CycleScan& cycles, const std::vector<CriticalPoint>& crit,
                  const std::vector<OrbitFate>& fates, const ExposedScan& exposed,
                  const std::vector<Declaration>& declarations, const ROOptions& ro) {
  Atlas atlas;
  const double tol = ro.tolerance;
  std::vector<StableRegion> regions;

  for (const auto& c : cycles.cycles) {
    StableRegion reg;
    switch (c.kind) {
      case CycleKind::SuperAttracting: reg.type = RegionType::SuperAttracting; break;
      case CycleKind::Attracting: reg.type = RegionType::Attracting; break;
      case CycleKind::RationallyIndifferent: reg.type = RegionType::Parabolic; break;
      case CycleKind::IrrationallyIndifferent: {
        bool declared = false;
        for (const auto& d : declarations)
          if (d.kind == Declaration::Kind::Siegel && d.anchor && anchor_matches(c, *d.anchor)) declared = true;
        if (!declared)
          atlas.warnings.push_back("W_UNDECLARED_INDIFFERENT: irrationally indifferent cycle through " +
                                   c.points[0].to_string() + " (possible Siegel/Cremer, undeclared); region omitted");
        continue;
      }
      default: continue;
    }
    reg.anchor_cycle = c.id;
    reg.period = c.period;
    reg.multiplier = c.multiplier;
    if (reg.type == RegionType::SuperAttracting) {
      if (!c.contains_critical)
        throw Error(ErrorCode::AtlasInvariant, "super-attracting cycle without a critical point");
      for (const auto& p : c.points) reg.local_degree *= valency_from_critical(p, crit, kAnchorTol);
    }
    reg.has_noncritical_periodic = reg.type == RegionType::Attracting;
    if (reg.type == RegionType::Parabolic) reg.theta = c.rotation;
    regions.push_back(std::move(reg));
  }

  for (std::size_t di = 0; di < declarations.size(); ++di) {
    const auto& d = declarations[di];
    StableRegion reg;
    reg.declaration = static_cast<int>(di);
    reg.theta = d.theta;
    reg.period = d.period;
    if (d.kind == Declaration::Kind::Herman) {
      if (r.degree() < 3) {
        atlas.warnings.push_back("W_DECLARATION_REJECTED: Herman ring declared for a degree-2 map (requires degree >= 3)");
        continue;
      }
      reg.type = RegionType::Herman;
      regions.push_back(std::move(reg));
      continue;
    }
    const PeriodicCycle* anchor = nullptr;
    if (d.anchor)
      for (const auto& c : cycles.cycles)
        if (c.kind == CycleKind::IrrationallyIndifferent && anchor_matches(c, *d.anchor)) anchor = &c;
    if (!anchor) {
      atlas.warnings.push_back("W_DECLARATION_REJECTED: Siegel anchor " +
                               (d.anchor ? d.anchor->to_string() : std::string("(missing)")) +
                               " is not a point of an irrationally indifferent cycle");
      continue;
    }
    reg.type = RegionType::Siegel;
    reg.anchor_cycle = anchor->id;
    reg.period = anchor->period;
    reg.multiplier = anchor->multiplier;
    reg.has_noncritical_periodic = true;
    double diff = std::abs(d.theta - anchor->rotation);
    diff = std::min(diff, 1.0 - diff);
    if (diff > 1e-6) {
      std::ostringstream os;
      os << "W_THETA_MISMATCH: declared theta " << d.theta << " differs from the multiplier angle " << anchor->rotation;
      atlas.warnings.push_back(os.str());
    }
    regions.push_back(std::move(reg));
  }

  std::stable_sort(regions.begin(), regions.end(), [&](const StableRegion& a, const StableRegion& b) {
    if (a.type != b.type) return type_rank(a.type) < type_rank(b.type);
    if (a.period != b.period) return a.period < b.period;
    const PeriodicCycle* ca = cycle_by_id(cycles, a.anchor_cycle);
    const PeriodicCycle* cb = cycle_by_id(cycles, b.anchor_cycle);
    if (ca && cb) return point_less(ca->points[0], cb->points[0]);
    return a.declaration < b.declaration;
  });
  for (std::size_t i = 0; i < regions.size(); ++i) regions[i].id = static_cast<int>(i);

  if (static_cast<int>(regions.size()) > 2 * r.degree() - 2)
    throw Error(ErrorCode::AtlasInvariant, "stable region count " + std::to_string(regions.size()) +
                                               " exceeds 2d - 2 = " + std::to_string(2 * r.degree() - 2));

  auto region_of_cycle = [&](int cycle_id) -> StableRegion* {
    for (auto& reg : regions)
      if (reg.anchor_cycle == cycle_id) return &reg;
    return nullptr;
  };
  auto region_of_declaration = [&](int decl) -> StableRegion* {
    for (auto& reg : regions)
      if (reg.declaration == decl) return &reg;
    return nullptr;
  };

  for (std::size_t i = 0; i < crit.size(); ++i) {
    const OrbitFate& f = fates[i];
    StableRegion* reg = nullptr;
    switch (f.kind) {
      case FateKind::Unresolved:
        atlas.unresolved_critical.push_back(static_cast<int>(i));
        atlas.warnings.push_back("W_UNRESOLVED_CRITICAL: orbit of critical point " + crit[i].point.to_string() +
                                 " unresolved after " + std::to_string(f.steps_used) + " steps; presumed in the Julia set");
        continue;
      case FateKind::LandsInDeclaredRotationDomain: reg = region_of_declaration(f.region_id); break;
      case FateKind::ConvergesToCycle:
      case FateKind::PreperiodicExactlyAt: reg = region_of_cycle(f.cycle_id); break;
    }
    if (!reg) continue;  // lands on a Julia cycle
    if (reg->type == RegionType::Siegel && f.kind == FateKind::PreperiodicExactlyAt) {
      // A critical point cannot land on a Siegel centre; treat as an inconsistency of the declaration.
      atlas.warnings.push_back("W_SIEGEL_CRITICAL_LANDING: critical point " + crit[i].point.to_string() +
                               " lands on a declared Siegel centre");
    }
    CriticalOrbitRecord rec;
    rec.critical_index = static_cast<int>(i);
    rec.point = crit[i].point;
    rec.region_id = reg->id;
    rec.preperiodic = f.kind == FateKind::PreperiodicExactlyAt;
    rec.valency = asymptotic_valency(f, cycles.cycles);
    rec.exposed_size = exposed_size_of(rec.point, exposed, tol);
    reg->records.push_back(rec);
  }

  for (auto& reg : regions) {
    auto& recs = reg.records;
    std::stable_sort(recs.begin(), recs.end(),
                     [](const CriticalOrbitRecord& a, const CriticalOrbitRecord& b) { return point_less(a.point, b.point); });
    for (std::size_t i = 0; i < recs.size(); ++i) {
      recs[i].representative = static_cast<int>(i);
      for (std::size_t j = 0; j < i; ++j) {
        if (!recs[j].ro_representative) continue;
        if (ro_related(r, recs[j].point, recs[i].point, ro.depth, crit, ro)) {
          recs[i].ro_representative = false;
          recs[i].representative = static_cast<int>(j);
          break;
        }
      }
    }
    if ((reg.type == RegionType::Attracting || reg.type == RegionType::Parabolic) && recs.empty())
      atlas.warnings.push_back(std::string("W_MISSING_CRITICAL_RECORD: ") + to_string(reg.type) + " region " +
                               std::to_string(reg.id) + " has no critical orbit within the budget");
    if (reg.type == RegionType::Parabolic && !atlas.unresolved_critical.empty()) {
      reg.blocked = true;
      reg.obstruction = "unresolved critical orbits may belong to this parabolic region";
    }
    if (const PeriodicCycle* c = cycle_by_id(cycles, reg.anchor_cycle))
      reg.anchor_exposed_size = exposed_size_of(c->points[0], exposed, tol);
  }

  for (const auto& reg : regions) {
    if (reg.type == RegionType::Attracting || reg.type == RegionType::Siegel) {
      IotaClass ic;
      ic.representative = cycle_by_id(cycles, reg.anchor_cycle)->points[0];
      ic.region_id = reg.id;
      ic.cycle_id = reg.anchor_cycle;
      ic.exposed_size = reg.anchor_exposed_size;
      atlas.iota_p.push_back(ic);
    }
    for (const auto& rec : reg.records) {
      if (!rec.ro_representative) continue;
      IotaClass ic;
      ic.representative = rec.point;
      ic.region_id = reg.id;
      ic.critical_index = rec.critical_index;
      ic.exposed_size = rec.exposed_size;
      atlas.iota_c.push_back(ic);
    }
  }
  atlas.regions = std::move(regions);
  return atlas;
}

}  // namespace ratdyn
