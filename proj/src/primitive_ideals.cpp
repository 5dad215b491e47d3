#include "ratdyn/primitive_ideals.hpp"

#include "ratdyn/errors.hpp"

namespace ratdyn {

namespace al = algebra;

std::string IsotropyGroup::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "0";
    case Kind::Z: return "Z";
    case Kind::FiniteCyclic: return "Z_" + std::to_string(order);
    case Kind::ZPlusFiniteCyclic: return "Z (+) Z_" + std::to_string(order);
    case Kind::SubgroupOfQmodZ: return "infinite subgroup of Q/Z";
  }
  return "?";
}

std::string IsotropyGroup::dual_class() const {
  switch (kind) {
    case Kind::Trivial: return "single";
    case Kind::Z: return "circle";
    case Kind::FiniteCyclic: return "finite " + std::to_string(order);
    case Kind::ZPlusFiniteCyclic: return "circle x " + std::to_string(order);
    case Kind::SubgroupOfQmodZ: return "cantor";
  }
  return "?";
}

al::Expr IsotropyGroup::group_algebra() const {
  switch (kind) {
    case Kind::Trivial: return al::scalars();
    case Kind::Z: return al::circle();
    case Kind::FiniteCyclic: return al::finite_power(al::scalars(), order);
    case Kind::ZPlusFiniteCyclic: return al::tensor({al::circle(), al::finite_power(al::scalars(), order)});
    case Kind::SubgroupOfQmodZ: return al::cantor();
  }
  return al::zero();
}

IsotropyGroup isotropy_of(const PointContext& ctx) {
  auto missing = [](const char* what) { return Error(ErrorCode::UnresolvedContext, std::string("isotropy needs ") + what); };
  using K = IsotropyGroup::Kind;
  if (!ctx.critical) throw missing("whether the point is critical");
  if (!*ctx.critical) {
    if (!ctx.periodic) throw missing("whether the point is periodic");
    return {*ctx.periodic ? K::Z : K::Trivial, 0};
  }
  if (!ctx.preperiodic) throw missing("whether the critical point is pre-periodic");
  if (*ctx.preperiodic) {
    if (!ctx.lands_on_critical_cycle) throw missing("the landing cycle of the critical point");
    if (*ctx.lands_on_critical_cycle) return {K::SubgroupOfQmodZ, 0};
  }
  if (!ctx.valency || ctx.valency->infinite) throw missing("a finite asymptotic valency");
  return {*ctx.preperiodic ? K::ZPlusFiniteCyclic : K::FiniteCyclic, ctx.valency->value};
}

const char* to_string(CoSupport c) {
  switch (c) {
    case CoSupport::Julia: return "julia";
    case CoSupport::ExposedOrbit: return "exposed_orbit";
    case CoSupport::OrbitPlusJulia: return "orbit_plus_julia";
    case CoSupport::ClosureOfFreeOrbit: return "closure_of_free_orbit";
  }
  return "?";
}

const char* to_string(T0Verdict v) {
  switch (v) {
    case T0Verdict::NonT0: return "non_T0";
    case T0Verdict::T0: return "T0";
    case T0Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

std::string set_text(const std::vector<SpherePoint>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + pts[i].to_string();
  return s + "}";
}

const PeriodicCycle* cycle_by_id(const CycleScan& cycles, int id) {
  for (const auto& c : cycles.cycles)
    if (c.id == id) return &c;
  return nullptr;
}

int critical_index_in(const ExposedOrbit& o, const std::vector<CriticalPoint>& crit) {
  for (std::size_t i = 0; i < crit.size(); ++i)
    for (const auto& p : o.points)
      if (same_point(p, crit[i].point, 1e-9)) return static_cast<int>(i);
  return -1;
}

PointContext critical_context(int ci, const CatalogInput& in) {
  PointContext ctx;
  ctx.critical = true;
  const OrbitFate& f = in.fates[ci];
  if (f.kind == FateKind::Unresolved) return ctx;
  ctx.preperiodic = f.kind == FateKind::PreperiodicExactlyAt;
  if (*ctx.preperiodic) {
    const PeriodicCycle* c = cycle_by_id(in.cycles, f.cycle_id);
    if (c) ctx.lands_on_critical_cycle = c->contains_critical;
  }
  try {
    ctx.valency = asymptotic_valency(f, in.cycles.cycles);
  } catch (const Error&) {
  }
  return ctx;
}

al::ExtensionSeq row(std::string label, al::Expr ideal, al::Expr total, al::Expr quotient) {
  al::ExtensionSeq s;
  s.label = std::move(label);
  s.ideal = std::move(ideal);
  s.total = std::move(total);
  s.quotient = std::move(quotient);
  return s;
}

// A = C*_r(I_c cap rho(I)) for the critical classes of one region.
al::Expr critical_part(const StableRegion& reg) {
  std::vector<al::Expr> parts;
  for (const auto& rec : reg.records) {
    if (!rec.ro_representative) continue;
    const al::Expr k = al::compacts_on(crit_symbol(rec.critical_index), rec.exposed_size);
    if (reg.type == RegionType::SuperAttracting && rec.preperiodic) {
      parts.push_back(al::tensor({al::cantor(), k}));
      continue;
    }
    if (rec.valency.infinite)
      throw Error(ErrorCode::NotRepresentable, "critical point " + rec.point.to_string() + " has infinite asymptotic valency");
    const al::Expr pw = al::finite_power(al::scalars(), rec.valency.value);
    if (reg.type == RegionType::Attracting && rec.preperiodic)
      parts.push_back(al::tensor({al::circle(), pw, k}));
    else
      parts.push_back(al::tensor({pw, k}));
  }
  return al::normalize(al::direct_sum(std::move(parts)));
}

std::vector<al::ExtensionSeq> case_iv_rows(const StableRegion& reg, const al::Expr& julia_total, long long bd_degree,
                                           int anchor_size, int anchor_cycle) {
  std::vector<al::ExtensionSeq> rows;
  const al::Expr quotient = al::named("C*_r(R)/I");
  const al::Expr a = critical_part(reg);
  const al::Expr lower_total = al::named("C*_r(J_R u (I_c cap rho(I)))");
  switch (reg.type) {
    case RegionType::SuperAttracting: {
      const al::Expr top = al::normalize(al::tensor({al::bunce_deddens(bd_degree), al::compacts()}));
      rows.push_back(row("column kernel", top, top, al::zero()));
      rows.back().degenerate = true;
      rows.push_back(row("middle", al::named("C*_r(rho(I) cap F_R)"), quotient, julia_total));
      rows.push_back(row("bottom", a, lower_total, julia_total));
      break;
    }
    case RegionType::Attracting: {
      const al::Expr kp = al::compacts_on(cycle_symbol(anchor_cycle), anchor_size);
      rows.push_back(row("top", al::compacts(), al::named("C*_r(RO(p))"), al::normalize(al::tensor({al::circle(), kp}))));
      rows.push_back(row("middle", al::named("C*_r(rho(I) cap F_R \\ RO(p))"), quotient, al::named("C*_r(J_R u RO(p))")));
      rows.push_back(row("bottom", a, lower_total, julia_total));
      break;
    }
    case RegionType::Parabolic:
    case RegionType::Siegel:
    case RegionType::Herman: {
      al::Expr top = reg.type == RegionType::Parabolic ? al::compacts()
                                                       : al::normalize(al::tensor({al::rotation(reg.theta), al::compacts()}));
      rows.push_back(row("column kernel", top, top, al::zero()));
      rows.back().degenerate = true;
      rows.push_back(row("middle", al::named("C*_r(rho(I) cap F_R)"), quotient, julia_total));
      rows.push_back(row("bottom", a, lower_total, julia_total));
      break;
    }
  }
  return rows;
}

bool julia_is_whole_sphere(const CatalogInput& in) {
  if (!in.atlas.regions.empty() || in.crit.empty()) return false;
  for (const auto& f : in.fates) {
    if (f.kind != FateKind::PreperiodicExactlyAt) return false;
    const PeriodicCycle* c = cycle_by_id(in.cycles, f.cycle_id);
    if (!c || c->kind != CycleKind::Repelling) return false;
  }
  return true;
}

}  // namespace

PrimitiveCatalog primitive_catalog(const CatalogInput& in) {
  PrimitiveCatalog cat;
  const al::ExtensionSeq& jx = in.decomposition.julia;
  const al::Expr julia_total = jx.blocked ? al::named("C*_r(J_R)") : jx.total;
  cat.julia_is_sphere = julia_is_whole_sphere(in);

  {
    PrimitiveIdealEntry e;
    e.co_support = CoSupport::Julia;
    e.description = "J_R";
    e.quotient_rows.push_back(jx);
    e.quotient = julia_total;
    e.simple = !in.julia.blocked && in.julia.in_julia.empty();
    if (e.simple) {
      e.quotient_note = "no exposed points in J_R: C*_r(J_R) is simple and purely infinite";
      cat.simple_quotients.push_back("C*_r(J_R)");
    } else if (in.julia.blocked) {
      e.quotient_note = "simplicity undecided: " + in.julia.obstruction;
    }
    cat.entries.push_back(std::move(e));
  }

  for (std::size_t k = 0; k < in.exposed.orbits.size(); ++k) {
    const ExposedOrbit& o = in.exposed.orbits[k];
    PrimitiveIdealEntry e;
    e.co_support = CoSupport::ExposedOrbit;
    e.ref = static_cast<int>(k);
    e.description = "RO" + set_text(o.points);
    e.family = true;
    try {
      PointContext ctx;
      if (o.contains_critical) {
        const int ci = critical_index_in(o, in.crit);
        if (ci < 0) throw Error(ErrorCode::UnresolvedContext, "critical member of " + e.description + " not found");
        ctx = critical_context(ci, in);
      } else {
        ctx.critical = false;
        ctx.periodic = true;  // critical-free exposed orbits are periodic cycles
      }
      e.isotropy = isotropy_of(ctx);
      const al::Expr mn = al::with_origin(al::matrix(o.size()), orbit_symbol(static_cast<int>(k)));
      e.co_support_algebra = al::normalize(al::tensor({e.isotropy.group_algebra(), mn}));
      e.quotient = al::normalize(mn);
      e.quotient_note = "co-support algebra " + al::to_ascii(*e.co_support_algebra);
      e.simple = o.size() <= 4;
      cat.simple_quotients.push_back("M_" + std::to_string(o.size()));
    } catch (const Error& err) {
      e.quotient_note = err.what();
      cat.obstructions.push_back(e.description + ": " + err.what());
    }
    cat.entries.push_back(std::move(e));
  }

  auto add_iii = [&](const IotaClass& cls, int index, const PointContext& ctx) {
    if (cls.exposed_size > 0) return;  // already covered as an exposed orbit
    PrimitiveIdealEntry e;
    e.co_support = CoSupport::OrbitPlusJulia;
    e.ref = index;
    e.description = "closure(RO(" + cls.representative.to_string() + ")) = RO u J_R";
    e.family = true;
    try {
      e.isotropy = isotropy_of(ctx);
      e.quotient_rows.push_back(row("quotient", al::compacts(), al::named("C*_r(R)/I"), julia_total));
      e.quotient_rows.push_back(row("co-support", al::normalize(al::tensor({e.isotropy.group_algebra(), al::compacts()})),
                                    al::named("C*_r(rho(I))"), julia_total));
      e.quotient_note = "identical symbolic data for every member of the family";
    } catch (const Error& err) {
      e.quotient_note = err.what();
      cat.obstructions.push_back(e.description + ": " + err.what());
    }
    cat.entries.push_back(std::move(e));
  };
  int iii_index = 0;
  for (const auto& cls : in.atlas.iota_p) {
    PointContext ctx;
    ctx.critical = false;
    ctx.periodic = true;
    add_iii(cls, iii_index++, ctx);
  }
  for (const auto& cls : in.atlas.iota_c) add_iii(cls, iii_index++, critical_context(cls.critical_index, in));

  for (const auto& reg : in.atlas.regions) {
    PrimitiveIdealEntry e;
    e.co_support = CoSupport::ClosureOfFreeOrbit;
    e.ref = reg.id;
    e.description = "closure(RO(x)), x free in region " + std::to_string(reg.id) + " (" + to_string(reg.type) + ")";
    if (reg.blocked) {
      e.quotient_note = "blocked: " + reg.obstruction;
      cat.obstructions.push_back(e.description + ": " + reg.obstruction);
    } else {
      try {
        e.quotient_rows = case_iv_rows(reg, julia_total, reg.local_degree, reg.anchor_exposed_size, reg.anchor_cycle);
      } catch (const Error& err) {
        e.quotient_note = err.what();
        cat.obstructions.push_back(e.description + ": " + err.what());
      }
    }
    cat.entries.push_back(std::move(e));
  }

  const bool any_exposed = !in.exposed.orbits.empty();
  if (!in.atlas.regions.empty()) {
    cat.t0 = T0Verdict::NonT0;
    cat.t0_reason = "the Fatou set is non-empty";
  } else if (any_exposed) {
    cat.t0 = T0Verdict::NonT0;
    cat.t0_reason = "exposed points exist";
  } else if (cat.julia_is_sphere) {
    cat.t0 = T0Verdict::T0;
    cat.t0_reason = "J_R is the sphere and there are no exposed points: single-point spectrum, C*_r(R) simple";
    cat.entries.front().simple = true;
  } else {
    cat.t0 = T0Verdict::Undetermined;
    cat.t0_reason = "no stable region or exposed point found, but J_R = sphere was not established";
  }
  return cat;
}

al::Json to_json(const PrimitiveCatalog& c) {
  al::Json j;
  j["t0_verdict"] = to_string(c.t0);
  j["t0_reason"] = c.t0_reason;
  j["julia_is_sphere"] = c.julia_is_sphere;
  j["simple_quotients"] = c.simple_quotients;
  al::Json entries = al::Json::array();
  for (const auto& e : c.entries) {
    al::Json je;
    je["co_support"] = to_string(e.co_support);
    je["ref"] = e.ref;
    je["description"] = e.description;
    if (e.family) {
      je["parametrization"] = "dual_of_isotropy";
      je["isotropy"] = e.isotropy.to_string();
      je["dual_class"] = e.isotropy.dual_class();
    } else {
      je["parametrization"] = "point";
    }
    if (e.co_support_algebra) {
      je["co_support_algebra"] = al::to_ascii(*e.co_support_algebra);
      je["co_support_algebra_expr"] = al::to_json(*e.co_support_algebra);
    }
    if (e.quotient) {
      je["quotient"] = al::to_ascii(*e.quotient);
      je["quotient_expr"] = al::to_json(*e.quotient);
    }
    if (!e.quotient_rows.empty()) {
      al::Json rows = al::Json::array();
      for (const auto& r : e.quotient_rows) rows.push_back(al::to_json(r));
      je["quotient_rows"] = rows;
    }
    if (!e.quotient_note.empty()) je["note"] = e.quotient_note;
    je["simple"] = e.simple;
    entries.push_back(je);
  }
  j["entries"] = entries;
  j["obstructions"] = c.obstructions;
  return j;
}

}  // namespace ratdyn
