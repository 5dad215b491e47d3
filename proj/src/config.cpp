#include "ratdyn/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ratdyn/errors.hpp"

namespace ratdyn {

DynamicsOptions AnalysisConfig::dynamics() const {
  DynamicsOptions d;
  d.max_period = max_period;
  d.root_degree_cap = root_degree_cap;
  d.orbit_budget = orbit_budget;
  d.tolerance = tolerance;
  return d;
}

ROOptions AnalysisConfig::restricted() const {
  ROOptions o;
  o.depth = ro_depth;
  o.preimage_depth = preimage_depth;
  o.critical_orbit_steps = critical_orbit_steps;
  o.tolerance = tolerance;
  return o;
}

namespace {

Error invalid(const std::string& msg) { return Error(ErrorCode::InvalidInput, msg); }

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw invalid(where + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw invalid("unknown key '" + it.key() + "' in " + where);
}

int positive_int(const Json& j, const char* key) {
  if (!j.is_number_integer() || j.get<long long>() <= 0 || j.get<long long>() > 1000000000)
    throw invalid(std::string(key) + " must be a positive integer");
  return j.get<int>();
}

double positive_double(const Json& j, const char* key) {
  if (!j.is_number() || !(j.get<double>() > 0.0)) throw invalid(std::string(key) + " must be a positive number");
  return j.get<double>();
}

std::string coefficient_text(const Json& c) {
  if (c.is_string()) return c.get<std::string>();
  if (c.is_number_integer()) return c.dump();
  if (c.is_number_float()) {
    std::string s = c.dump();
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
  }
  throw invalid("coefficients must be strings or numbers");
}

SpherePoint point_from(const Json& j) {
  if (j.is_string()) return SpherePoint::parse(j.get<std::string>());
  return SpherePoint(Scalar::parse(coefficient_text(j)));
}

Declaration declaration_from(const Json& j) {
  check_keys(j, {"kind", "anchor", "theta", "period", "members"}, "declaration");
  Declaration d;
  const std::string kind = j.value("kind", "");
  if (kind == "siegel") d.kind = Declaration::Kind::Siegel;
  else if (kind == "herman") d.kind = Declaration::Kind::Herman;
  else throw invalid("declaration kind must be 'siegel' or 'herman'");
  if (j.contains("anchor")) d.anchor = point_from(j["anchor"]);
  if (!j.contains("theta")) throw invalid("declaration needs theta");
  d.theta = j["theta"].get<double>();
  if (!(d.theta > 0.0 && d.theta < 1.0)) throw invalid("declaration theta must lie in (0, 1)");
  if (j.contains("period")) d.period = positive_int(j["period"], "period");
  if (j.contains("members"))
    for (const auto& m : j["members"]) d.members.push_back(point_from(m));
  return d;
}

Json point_json(const SpherePoint& p) { return p.to_string(); }

}  // namespace

void merge_config(AnalysisConfig& c, const Json& j) {
  check_keys(j,
             {"max_period", "ro_depth", "preimage_depth", "orbit_budget", "tolerance", "root_degree_cap",
              "critical_orbit_steps", "declarations", "render"},
             "config");
  if (j.contains("max_period")) c.max_period = positive_int(j["max_period"], "max_period");
  if (j.contains("ro_depth")) c.ro_depth = positive_int(j["ro_depth"], "ro_depth");
  if (j.contains("preimage_depth")) c.preimage_depth = positive_int(j["preimage_depth"], "preimage_depth");
  if (j.contains("orbit_budget")) c.orbit_budget = positive_int(j["orbit_budget"], "orbit_budget");
  if (j.contains("tolerance")) c.tolerance = positive_double(j["tolerance"], "tolerance");
  if (j.contains("root_degree_cap")) c.root_degree_cap = positive_int(j["root_degree_cap"], "root_degree_cap");
  if (j.contains("critical_orbit_steps"))
    c.critical_orbit_steps = positive_int(j["critical_orbit_steps"], "critical_orbit_steps");
  if (j.contains("declarations")) {
    c.declarations.clear();
    for (const auto& d : j["declarations"]) c.declarations.push_back(declaration_from(d));
  }
  if (j.contains("render")) {
    const Json& r = j["render"];
    check_keys(r, {"width", "height", "window", "max_iter", "threshold"}, "render");
    RenderConfig rc;
    if (r.contains("width")) rc.width = positive_int(r["width"], "width");
    if (r.contains("height")) rc.height = positive_int(r["height"], "height");
    if (r.contains("max_iter")) rc.max_iter = positive_int(r["max_iter"], "max_iter");
    if (r.contains("threshold")) rc.threshold = positive_double(r["threshold"], "threshold");
    if (r.contains("window")) {
      const Json& w = r["window"];
      if (!w.is_array() || w.size() != 4) throw invalid("render window must be [x_min, x_max, y_min, y_max]");
      rc.x_min = w[0].get<double>();
      rc.x_max = w[1].get<double>();
      rc.y_min = w[2].get<double>();
      rc.y_max = w[3].get<double>();
    }
    c.render = rc;
  }
}

AnalysisConfig config_from_json(const Json& j) {
  AnalysisConfig c;
  merge_config(c, j);
  return c;
}

Json to_json(const AnalysisConfig& c) {
  Json j;
  j["max_period"] = c.max_period;
  j["ro_depth"] = c.ro_depth;
  j["preimage_depth"] = c.preimage_depth;
  j["orbit_budget"] = c.orbit_budget;
  j["tolerance"] = c.tolerance;
  j["root_degree_cap"] = c.root_degree_cap;
  j["critical_orbit_steps"] = c.critical_orbit_steps;
  Json decl = Json::array();
  for (const auto& d : c.declarations) {
    Json jd;
    jd["kind"] = d.kind == Declaration::Kind::Siegel ? "siegel" : "herman";
    if (d.anchor) jd["anchor"] = point_json(*d.anchor);
    jd["theta"] = d.theta;
    jd["period"] = d.period;
    Json mem = Json::array();
    for (const auto& m : d.members) mem.push_back(point_json(m));
    jd["members"] = mem;
    decl.push_back(jd);
  }
  j["declarations"] = decl;
  if (c.render) {
    Json r;
    r["width"] = c.render->width;
    r["height"] = c.render->height;
    r["window"] = Json::array({c.render->x_min, c.render->x_max, c.render->y_min, c.render->y_max});
    r["max_iter"] = c.render->max_iter;
    r["threshold"] = c.render->threshold;
    j["render"] = r;
  } else {
    j["render"] = nullptr;
  }
  return j;
}

ParsedMap parse_map(const Json& j, double tolerance) {
  check_keys(j, {"numerator", "denominator"}, "map");
  if (!j.contains("numerator") || !j.contains("denominator"))
    throw invalid("map needs 'numerator' and 'denominator' arrays");
  auto read = [](const Json& arr, const char* name) {
    if (!arr.is_array() || arr.empty()) throw invalid(std::string(name) + " must be a non-empty array");
    std::vector<Scalar> cs;
    for (const auto& c : arr) cs.push_back(Scalar::parse(coefficient_text(c)));
    return Polynomial::from_highest_first(cs);
  };
  Polynomial p = read(j["numerator"], "numerator");
  Polynomial q = read(j["denominator"], "denominator");
  ParsedMap out{RationalMap(std::move(p), std::move(q), tolerance), {}, j};
  if (out.map.was_reduced())
    out.notices.push_back("N_REDUCED: numerator and denominator shared a common factor; reduced to " + out.map.to_string());
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace ratdyn
