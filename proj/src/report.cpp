#include "ratdyn/report.hpp"

#include <sstream>

#include "ratdyn/errors.hpp"

namespace ratdyn {

namespace al = algebra;

namespace {

constexpr const char* kToolName = "ratdyn";
constexpr const char* kToolVersion = "1.0.0";

std::string set_text(const std::vector<SpherePoint>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + pts[i].to_string();
  return s + "}";
}

Json points_json(const std::vector<SpherePoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p.to_string());
  return a;
}

Json fate_json(const OrbitFate& f) {
  Json j;
  j["kind"] = to_string(f.kind);
  if (f.cycle_id >= 0) j["cycle_id"] = f.cycle_id;
  if (f.cycle_index >= 0) j["cycle_index"] = f.cycle_index;
  if (f.region_id >= 0) j["declaration"] = f.region_id;
  j["step"] = f.step;
  j["steps_used"] = f.steps_used;
  return j;
}

Json region_json(const StableRegion& r) {
  Json j;
  j["id"] = r.id;
  j["type"] = to_string(r.type);
  j["anchor_cycle"] = r.anchor_cycle;
  j["period"] = r.period;
  if (r.type == RegionType::SuperAttracting) j["local_degree"] = r.local_degree;
  if (r.anchor_cycle >= 0) j["multiplier"] = r.multiplier.to_string();
  if (r.type == RegionType::Siegel || r.type == RegionType::Herman || r.type == RegionType::Parabolic) j["theta"] = r.theta;
  if (r.declaration >= 0) j["declaration"] = r.declaration;
  Json recs = Json::array();
  for (const auto& rec : r.records) {
    Json jr;
    jr["critical_index"] = rec.critical_index;
    jr["point"] = rec.point.to_string();
    jr["preperiodic"] = rec.preperiodic;
    jr["asymptotic_valency"] = rec.valency.to_string();
    jr["ro_representative"] = rec.ro_representative;
    jr["representative"] = rec.representative;
    jr["exposed_size"] = rec.exposed_size;
    recs.push_back(jr);
  }
  j["critical_orbits"] = recs;
  j["anchor_exposed_size"] = r.anchor_exposed_size;
  j["blocked"] = r.blocked;
  if (r.blocked) j["obstruction"] = r.obstruction;
  return j;
}

Json iota_json(const std::vector<IotaClass>& v) {
  Json a = Json::array();
  for (const auto& c : v) {
    Json j;
    j["representative"] = c.representative.to_string();
    j["region_id"] = c.region_id;
    if (c.cycle_id >= 0) j["cycle_id"] = c.cycle_id;
    if (c.critical_index >= 0) j["critical_index"] = c.critical_index;
    j["exposed_size"] = c.exposed_size;
    a.push_back(j);
  }
  return a;
}

template <typename F>
bool stage(Analysis& a, const char* name, F&& f) {
  try {
    f();
    return true;
  } catch (const Error& e) {
    a.obstructions.push_back({name, to_string(e.code()), e.what()});
  }
  return false;
}

}  // namespace

Json coded_message(const std::string& line) {
  Json j;
  const auto pos = line.find(": ");
  if (pos != std::string::npos && pos > 0 && line.compare(0, 2, "W_") == 0) {
    j["code"] = line.substr(0, pos);
    j["message"] = line.substr(pos + 2);
  } else if (pos != std::string::npos && line.compare(0, 2, "N_") == 0) {
    j["code"] = line.substr(0, pos);
    j["message"] = line.substr(pos + 2);
  } else {
    j["code"] = "W_GENERAL";
    j["message"] = line;
  }
  return j;
}

Analysis run_analysis(const RationalMap& map, const AnalysisConfig& config) {
  Analysis a(map);
  a.config = config;
  const DynamicsOptions dyn = config.dynamics();
  const ROOptions ro = config.restricted();

  if (!stage(a, "critical_points", [&] { a.crit = critical_points(map, dyn.roots); })) return a;
  if (!stage(a, "cycles", [&] { a.cycles = periodic_cycles(map, a.crit, dyn); })) return a;

  std::vector<DeclaredDomain> domains;
  for (std::size_t i = 0; i < config.declarations.size(); ++i)
    if (!config.declarations[i].members.empty())
      domains.push_back({static_cast<int>(i), config.declarations[i].members});
  if (!stage(a, "critical_fates", [&] {
        for (const auto& c : a.crit) {
          a.fates.push_back(orbit_fate(map, c.point, a.cycles.cycles, a.crit, dyn, domains));
          bool known = a.fates.back().kind != FateKind::Unresolved;
          AsymptoticValency v;
          if (known) v = asymptotic_valency(a.fates.back(), a.cycles.cycles);
          a.critical_valency.push_back(v);
          a.critical_valency_known.push_back(known);
        }
      }))
    return a;

  const std::vector<int> siegel = declared_siegel_cycles(a.cycles, config.declarations, config.tolerance);
  if (!stage(a, "exposed_orbits", [&] { a.exposed = exposed_orbits(map, a.crit, a.cycles, a.fates, dyn, ro, siegel); }))
    return a;
  a.julia = julia_exposed_partition(a.exposed.orbits);
  for (std::size_t k = 0; k < a.exposed.orbits.size(); ++k)
    if (a.exposed.orbits[k].membership == Membership::Julia) a.julia_orbit_index.push_back(static_cast<int>(k));

  if (!stage(a, "atlas", [&] { a.atlas = build_atlas(map, a.cycles, a.crit, a.fates, a.exposed, config.declarations, ro); }))
    return a;
  if (!stage(a, "julia_extension", [&] { a.julia_ext = julia_extension(a.julia, a.julia_orbit_index); })) {
    a.julia_ext.label = "julia";
    a.julia_ext.blocked = true;
    a.julia_ext.obstruction = a.obstructions.back().message;
  }
  if (!stage(a, "decomposition", [&] { a.decomposition = full_decomposition(a.atlas, a.julia_ext); })) return a;
  for (const auto& o : a.decomposition.obstructions) a.obstructions.push_back({"decomposition", "Blocked", o});
  if (!stage(a, "primitive_ideals", [&] {
        a.catalog = primitive_catalog({a.atlas, a.exposed, a.julia, a.decomposition, a.cycles, a.crit, a.fates});
      }))
    return a;
  for (const auto& o : a.catalog.obstructions) a.obstructions.push_back({"primitive_ideals", "Blocked", o});
  a.complete = true;
  return a;
}

Json report_json(const Analysis& a, const Json& map_echo) {
  Json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["config"] = to_json(a.config);

  Json m;
  m["input"] = map_echo;
  m["normalized"] = a.map.to_string();
  m["degree"] = a.map.degree();
  m["mode"] = a.map.is_exact() ? "exact" : "floating";
  m["polynomial"] = a.map.is_polynomial();
  m["reduced"] = a.map.was_reduced();
  j["map"] = m;

  Json crit = Json::array();
  for (std::size_t i = 0; i < a.crit.size(); ++i) {
    Json c;
    c["index"] = static_cast<int>(i);
    c["point"] = a.crit[i].point.to_string();
    c["valency"] = a.crit[i].valency;
    c["multiplicity"] = a.crit[i].multiplicity;
    if (i < a.fates.size()) c["fate"] = fate_json(a.fates[i]);
    if (i < a.critical_valency.size())
      c["asymptotic_valency"] = a.critical_valency_known[i] ? Json(a.critical_valency[i].to_string()) : Json(nullptr);
    crit.push_back(c);
  }
  j["critical_points"] = crit;

  Json cyc;
  cyc["requested_max_period"] = a.cycles.requested_max_period;
  cyc["scanned_max_period"] = a.cycles.scanned_max_period;
  cyc["root_degree_cap"] = a.config.root_degree_cap;
  cyc["fixed_point_count"] = a.cycles.fixed_point_count;
  Json items = Json::array();
  for (const auto& c : a.cycles.cycles) {
    Json ci;
    ci["id"] = c.id;
    ci["period"] = c.period;
    ci["points"] = points_json(c.points);
    ci["multiplier"] = c.multiplier.to_string();
    ci["multiplier_abs"] = c.multiplier.abs();
    ci["kind"] = to_string(c.kind);
    if (c.kind == CycleKind::RationallyIndifferent) ci["root_of_unity_order"] = c.root_of_unity_order;
    if (c.kind == CycleKind::IrrationallyIndifferent) ci["rotation"] = c.rotation;
    ci["contains_critical"] = c.contains_critical;
    ci["fixed_point_multiplicity"] = c.fixed_point_multiplicity;
    items.push_back(ci);
  }
  cyc["items"] = items;
  j["cycles"] = cyc;

  Json ex;
  Json orbits = Json::array();
  for (std::size_t k = 0; k < a.exposed.orbits.size(); ++k) {
    const auto& o = a.exposed.orbits[k];
    Json jo;
    jo["index"] = static_cast<int>(k);
    jo["points"] = points_json(o.points);
    jo["type"] = o.type;
    jo["contains_critical"] = o.contains_critical;
    jo["critical_preperiodic"] = o.critical_preperiodic;
    jo["membership"] = to_string(o.membership);
    jo["asymptotic_valency"] = o.asymptotic_valency ? Json(o.asymptotic_valency->to_string()) : Json(nullptr);
    orbits.push_back(jo);
  }
  ex["orbits"] = orbits;
  ex["union"] = points_json(a.exposed.union_points);
  Json und = Json::array();
  for (const auto& u : a.exposed.undecided) und.push_back({{"points", points_json(u.points)}, {"reason", u.reason}});
  ex["undecided"] = und;
  ex["search_bounds"] = {{"seed_count", a.exposed.seeds.size()},
                         {"max_seed_period", a.exposed.max_seed_period},
                         {"forward_depth", a.exposed.forward_depth},
                         {"preimage_depth", a.exposed.preimage_depth},
                         {"critical_orbit_steps", a.exposed.critical_orbit_steps}};
  Json notes = Json::array();
  for (const auto& n : a.exposed.notes) notes.push_back(coded_message(n));
  ex["notes"] = notes;
  j["exposed"] = ex;

  Json at;
  Json regions = Json::array();
  for (const auto& r : a.atlas.regions) regions.push_back(region_json(r));
  at["regions"] = regions;
  at["iota_p"] = iota_json(a.atlas.iota_p);
  at["iota_c"] = iota_json(a.atlas.iota_c);
  at["unresolved_critical"] = a.atlas.unresolved_critical;
  j["atlas"] = at;

  Json alg;
  alg["julia_fatou"] = al::to_json(a.decomposition.julia_fatou);
  alg["julia"] = al::to_json(a.julia_ext);
  Json fr = Json::array();
  for (const auto& r : a.decomposition.fatou_regions) fr.push_back(al::to_json(r));
  alg["fatou_regions"] = fr;
  alg["fatou_sum"] = al::to_ascii(a.decomposition.fatou_sum);
  alg["six_square"] = al::to_json(a.decomposition.square);
  Json kt = Json::array();
  for (const auto& r : a.atlas.regions)
    if (r.type == RegionType::SuperAttracting) {
      al::KTheory k;
      if (al::k_theory(al::bunce_deddens(r.local_degree), k))
        kt.push_back({{"algebra", al::to_ascii(al::bunce_deddens(r.local_degree))}, {"K0", k.k0}, {"K1", k.k1}});
    }
  alg["k_theory"] = kt;
  j["algebra"] = alg;

  j["primitive_ideals"] = to_json(a.catalog);

  Json warnings = Json::array();
  for (const auto& n : a.notices) warnings.push_back(coded_message(n));
  for (const auto& w : a.cycles.warnings) warnings.push_back(coded_message(w));
  for (const auto& w : a.atlas.warnings) warnings.push_back(coded_message(w));
  j["warnings"] = warnings;
  Json obs = Json::array();
  for (const auto& o : a.obstructions) obs.push_back({{"stage", o.stage}, {"code", o.code}, {"message", o.message}});
  j["obstructions"] = obs;
  j["complete"] = a.complete;
  return j;
}

std::string report_text(const Analysis& a) {
  std::ostringstream os;
  os << "map: R(z) = " << a.map.to_string() << "  (degree " << a.map.degree() << ", "
     << (a.map.is_exact() ? "exact" : "floating") << ")\n\n";

  os << "critical points:\n";
  for (std::size_t i = 0; i < a.crit.size(); ++i) {
    os << "  " << a.crit[i].point.to_string() << "  valency " << a.crit[i].valency;
    if (i < a.fates.size()) {
      os << "  fate " << to_string(a.fates[i].kind);
      if (a.fates[i].cycle_id >= 0) os << " (cycle " << a.fates[i].cycle_id << ")";
    }
    if (i < a.critical_valency.size() && a.critical_valency_known[i])
      os << "  asymptotic valency " << a.critical_valency[i].to_string();
    os << "\n";
  }

  os << "\ncycles (period <= " << a.cycles.scanned_max_period << " of " << a.cycles.requested_max_period << " requested):\n";
  for (const auto& c : a.cycles.cycles)
    os << "  #" << c.id << " period " << c.period << " " << set_text(c.points) << "  " << to_string(c.kind)
       << "  multiplier " << c.multiplier.to_string() << "\n";

  os << "\nexposed orbits:\n";
  if (a.exposed.orbits.empty()) os << "  (none found within the search bounds)\n";
  for (const auto& o : a.exposed.orbits) {
    os << "  " << set_text(o.points) << "  type " << o.type << "  " << to_string(o.membership);
    if (o.asymptotic_valency) os << "  asymptotic valency " << o.asymptotic_valency->to_string();
    os << "\n";
  }
  for (const auto& u : a.exposed.undecided) os << "  undecided " << set_text(u.points) << ": " << u.reason << "\n";
  for (const auto& n : a.exposed.notes) os << "  note " << n << "\n";

  os << "\nstable regions:\n";
  if (a.atlas.regions.empty()) os << "  (none)\n";
  for (const auto& r : a.atlas.regions) {
    os << "  region " << r.id << ": " << to_string(r.type) << " period " << r.period;
    if (r.type == RegionType::SuperAttracting) os << " local degree " << r.local_degree;
    os << "  critical orbits " << r.records.size() << (r.blocked ? "  [blocked: " + r.obstruction + "]" : "") << "\n";
  }

  os << "\nextensions:\n";
  os << "  " << al::to_ascii(a.decomposition.julia_fatou) << "\n";
  os << "  " << al::to_ascii(a.julia_ext) << "\n";
  os << "    ideal attributes:";
  for (const auto& s : julia_ideal_attributes()) os << " " << s;
  os << "\n";
  for (const auto& r : a.decomposition.fatou_regions) os << "  " << al::to_ascii(r) << "\n";

  os << "\nsix-extension square:\n" << al::to_ascii(a.decomposition.square) << "\n";

  os << "primitive ideals (T0 verdict: " << to_string(a.catalog.t0) << "; " << a.catalog.t0_reason << "):\n";
  for (const auto& e : a.catalog.entries) {
    os << "  [" << to_string(e.co_support) << "] " << e.description;
    if (e.family) os << "  family over dual of " << e.isotropy.to_string() << " (" << e.isotropy.dual_class() << ")";
    if (e.quotient) os << "  quotient " << al::to_ascii(*e.quotient);
    if (e.simple) os << "  simple";
    os << "\n";
    for (const auto& r : e.quotient_rows)
      if (e.co_support != CoSupport::Julia) os << "      " << al::to_ascii(r) << "\n";
    if (!e.quotient_note.empty()) os << "      " << e.quotient_note << "\n";
  }
  os << "  simple quotients:";
  for (const auto& s : a.catalog.simple_quotients) os << " " << s;
  os << "\n";

  auto list = [&](const char* title, const std::vector<std::string>& v) {
    for (const auto& w : v) os << title << w << "\n";
  };
  os << "\n";
  list("notice: ", a.notices);
  list("warning: ", a.cycles.warnings);
  list("warning: ", a.atlas.warnings);
  for (const auto& o : a.obstructions) os << "obstruction [" << o.stage << "] " << o.message << "\n";
  return os.str();
}

}  // namespace ratdyn
