#include "ratdyn/synth.hpp"

#include "ratdyn/errors.hpp"

namespace ratdyn {

namespace al = algebra;

std::string crit_symbol(int index) { return "crit:" + std::to_string(index); }
std::string cycle_symbol(int id) { return "cycle:" + std::to_string(id); }
std::string orbit_symbol(int index) { return "orbit:" + std::to_string(index); }
std::string region_symbol(int id) { return "region:" + std::to_string(id); }

std::vector<std::string> julia_ideal_attributes() {
  return {"separable", "purely_infinite", "nuclear", "simple", "UCT"};
}

al::Expr julia_orbit_algebra(const ExposedOrbit& orbit, const std::string& symbol) {
  const al::Expr mn = al::with_origin(al::matrix(orbit.size()), symbol);
  if (orbit.type == 1) return al::tensor({al::circle(), mn});
  if (!orbit.asymptotic_valency || orbit.asymptotic_valency->infinite)
    throw Error(ErrorCode::NotRepresentable, "orbit of type " + std::to_string(orbit.type) +
                                                 " needs a finite asymptotic valency");
  const al::Expr power = al::with_origin(al::finite_power(al::scalars(), orbit.asymptotic_valency->value), symbol);
  if (orbit.type == 2) return al::tensor({mn, al::circle(), power});
  return al::tensor({mn, power});
}

al::ExtensionSeq julia_extension(const JuliaPartition& partition, const std::vector<int>& orbit_index) {
  al::ExtensionSeq s;
  s.label = "julia";
  s.ideal = al::opaque("C*_r(J_R\\E_R)", julia_ideal_attributes());
  if (partition.blocked) {
    s.blocked = true;
    s.obstruction = partition.obstruction;
    s.total = al::named("C*_r(J_R)");
    s.quotient = al::named("C*_r(J_R)/C*_r(J_R\\E_R)");
    return s;
  }
  if (partition.in_julia.empty()) {
    s.degenerate = true;
    s.total = al::opaque("C*_r(J_R)", julia_ideal_attributes());
    s.quotient = al::zero();
    return s;
  }
  std::vector<al::Expr> parts;
  for (std::size_t i = 0; i < partition.in_julia.size(); ++i) {
    const int k = i < orbit_index.size() ? orbit_index[i] : static_cast<int>(i);
    parts.push_back(julia_orbit_algebra(partition.in_julia[i], orbit_symbol(k)));
  }
  s.quotient = al::normalize(al::direct_sum(std::move(parts)));
  s.total = al::named("C*_r(J_R)");
  return s;
}

namespace {

al::Expr k_of_record(const CriticalOrbitRecord& rec) { return al::compacts_on(crit_symbol(rec.critical_index), rec.exposed_size); }

al::Expr power_of(const CriticalOrbitRecord& rec) {
  if (rec.valency.infinite)
    throw Error(ErrorCode::NotRepresentable, "critical point " + rec.point.to_string() + " has infinite asymptotic valency");
  return al::with_origin(al::finite_power(al::scalars(), rec.valency.value), crit_symbol(rec.critical_index));
}

}  // namespace

al::Expr iota_c_algebra(const CriticalOrbitRecord& rec) {
  if (rec.preperiodic && rec.valency.infinite) return al::tensor({al::cantor(), k_of_record(rec)});
  if (rec.preperiodic) return al::tensor({power_of(rec), al::circle(), k_of_record(rec)});
  return al::tensor({power_of(rec), k_of_record(rec)});
}

al::ExtensionSeq region_extension(const StableRegion& region) {
  al::ExtensionSeq s;
  s.label = "region " + std::to_string(region.id) + " (" + to_string(region.type) + ")";
  s.total = al::named("C*_r(Omega_" + std::to_string(region.id) + ")");
  const std::string rsym = region_symbol(region.id);
  if (region.blocked) {
    s.blocked = true;
    s.obstruction = region.obstruction;
    s.ideal = al::named("ideal of Omega_" + std::to_string(region.id));
    s.quotient = al::named("quotient of Omega_" + std::to_string(region.id));
    return s;
  }
  std::vector<const CriticalOrbitRecord*> reps;
  for (const auto& r : region.records)
    if (r.ro_representative) reps.push_back(&r);
  const al::Expr kq = al::compacts_on(cycle_symbol(region.anchor_cycle), region.anchor_exposed_size);
  std::vector<al::Expr> q;
  try {
    switch (region.type) {
      case RegionType::SuperAttracting:
        s.ideal = al::tensor({al::compacts(), al::with_origin(al::mapping_torus(region.local_degree), rsym)});
        for (const auto* r : reps)
          q.push_back(r->preperiodic ? al::tensor({al::cantor(), k_of_record(*r)}) : al::tensor({power_of(*r), k_of_record(*r)}));
        break;
      case RegionType::Attracting:
      case RegionType::Siegel:
        if (region.type == RegionType::Attracting) {
          s.ideal = al::tensor({al::compacts(), al::with_origin(al::torus2(), rsym)});
        } else {
          s.ideal = al::tensor({al::compacts(), al::reals0(), al::with_origin(al::rotation(region.theta), rsym)});
        }
        q.push_back(al::tensor({al::circle(), kq}));
        for (const auto* r : reps)
          q.push_back(r->preperiodic ? al::tensor({power_of(*r), al::circle(), k_of_record(*r)})
                                     : al::tensor({power_of(*r), k_of_record(*r)}));
        break;
      case RegionType::Parabolic:
        s.ideal = al::tensor({al::compacts(), al::with_origin(al::circle(), rsym), al::reals0()});
        for (const auto* r : reps) q.push_back(al::tensor({power_of(*r), k_of_record(*r)}));
        break;
      case RegionType::Herman:
        s.ideal = al::tensor({al::compacts(), al::reals0(), al::with_origin(al::rotation(region.theta), rsym)});
        for (const auto* r : reps) q.push_back(al::tensor({power_of(*r), k_of_record(*r)}));
        break;
    }
  } catch (const Error& e) {
    s.blocked = true;
    s.obstruction = e.what();
    s.quotient = al::named("quotient of Omega_" + std::to_string(region.id));
    return s;
  }
  s.ideal = al::normalize(s.ideal);
  s.quotient = al::normalize(al::direct_sum(std::move(q)));
  s.degenerate = s.quotient.kind == al::Kind::Zero;
  return s;
}

Decomposition full_decomposition(const Atlas& atlas, const al::ExtensionSeq& julia) {
  Decomposition out;
  out.julia = julia;
  bool any_blocked = false;
  std::vector<al::Expr> totals, ideals;
  for (const auto& reg : atlas.regions) {
    auto ext = region_extension(reg);
    if (ext.blocked) {
      any_blocked = true;
      out.obstructions.push_back(ext.label + ": " + ext.obstruction);
    }
    totals.push_back(ext.total);
    ideals.push_back(ext.ideal);
    out.fatou_regions.push_back(std::move(ext));
  }
  out.fatou_sum = al::normalize(al::direct_sum(totals));

  const al::Expr julia_total = julia.blocked ? al::named("C*_r(J_R)") : julia.total;
  if (julia.blocked) out.obstructions.push_back("julia: " + julia.obstruction);

  out.julia_fatou.label = "julia_fatou";
  out.julia_fatou.total = al::named("C*_r(R)");
  if (atlas.regions.empty()) {
    out.julia_fatou.ideal = al::zero();
    out.julia_fatou.quotient = julia_total;
    out.julia_fatou.degenerate = true;
  } else {
    out.julia_fatou.ideal = out.fatou_sum;
    out.julia_fatou.quotient = julia_total;
  }

  auto& sq = out.square;
  if (any_blocked) {
    sq.cell[0][0] = al::named("C*_r(F_R\\I) [blocked]");
    sq.cell[2][0] = al::named("C*_r(I_c) [blocked]");
  } else {
    sq.cell[0][0] = al::normalize(al::direct_sum(ideals));
    std::vector<al::Expr> ic;
    for (const auto& cls : atlas.iota_c)
      for (const auto& reg : atlas.regions)
        if (reg.id == cls.region_id)
          for (const auto& rec : reg.records)
            if (rec.critical_index == cls.critical_index) ic.push_back(iota_c_algebra(rec));
    sq.cell[2][0] = al::normalize(al::direct_sum(std::move(ic)));
  }
  std::vector<al::Expr> ip;
  for (const auto& cls : atlas.iota_p)
    ip.push_back(al::tensor({al::circle(), al::compacts_on(cycle_symbol(cls.cycle_id), cls.exposed_size)}));
  sq.cell[0][2] = al::normalize(al::direct_sum(std::move(ip)));
  sq.cell[2][2] = julia_total;
  sq.cell[0][1] = al::named("C*_r(F_R\\I_c)");
  sq.cell[1][0] = al::named("C*_r(F_R\\I_p)");
  sq.cell[1][1] = al::named("C*_r(R)");
  sq.cell[1][2] = al::named("C*_r(J_R u I_p)");
  sq.cell[2][1] = al::named("C*_r(J_R u I_c)");
  sq.row_labels[0] = "0 -> C*_r(F_R\\I) -> C*_r(F_R\\I_c) -> C*_r(I_p) -> 0";
  sq.row_labels[1] = "0 -> C*_r(F_R\\I_p) -> C*_r(R) -> C*_r(J_R u I_p) -> 0";
  sq.row_labels[2] = "0 -> C*_r(I_c) -> C*_r(J_R u I_c) -> C*_r(J_R) -> 0";
  sq.col_labels[0] = "0 -> C*_r(F_R\\I) -> C*_r(F_R\\I_p) -> C*_r(I_c) -> 0";
  sq.col_labels[1] = "0 -> C*_r(F_R\\I_c) -> C*_r(R) -> C*_r(J_R u I_c) -> 0";
  sq.col_labels[2] = "0 -> C*_r(I_p) -> C*_r(J_R u I_p) -> C*_r(J_R) -> 0";
  return out;
}

}  // namespace ratdyn
