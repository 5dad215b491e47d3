#pragma once

#include <string>
#include <vector>

#include "ratdyn/config.hpp"
#include "ratdyn/primitive_ideals.hpp"

namespace ratdyn {

struct Obstruction {
  std::string stage;
  std::string code;
  std::string message;
};

/// Everything computed for one map, in dependency order. Stages after a
/// failed one are left empty and the failure is recorded as an obstruction.
struct Analysis {
  explicit Analysis(RationalMap m) : map(std::move(m)) {}

  RationalMap map;
  AnalysisConfig config;
  std::vector<std::string> notices;
  std::vector<CriticalPoint> crit;
  CycleScan cycles;
  std::vector<OrbitFate> fates;
  std::vector<AsymptoticValency> critical_valency;  // parallel to crit; unset entries for unresolved fates
  std::vector<bool> critical_valency_known;
  ExposedScan exposed;
  JuliaPartition julia;
  std::vector<int> julia_orbit_index;
  Atlas atlas;
  algebra::ExtensionSeq julia_ext;
  Decomposition decomposition;
  PrimitiveCatalog catalog;
  std::vector<Obstruction> obstructions;
  bool complete = false;
};

Analysis run_analysis(const RationalMap& map, const AnalysisConfig& config);

/// Deterministic report document; `map_echo` is the input map document.
Json report_json(const Analysis& a, const Json& map_echo);
std::string report_text(const Analysis& a);

/// "W_CODE: message" -> {"code": "W_CODE", "message": "message"}.
Json coded_message(const std::string& line);

}  // namespace ratdyn
