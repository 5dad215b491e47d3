#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratdyn/fatou_atlas.hpp"
#include "ratdyn/render.hpp"

namespace ratdyn {

using Json = nlohmann::ordered_json;

struct AnalysisConfig {
  int max_period = 4;
  int ro_depth = 12;
  int preimage_depth = 6;
  int orbit_budget = 10000;
  double tolerance = 1e-9;
  int root_degree_cap = 80;
  int critical_orbit_steps = 8;
  std::vector<Declaration> declarations;
  std::optional<RenderConfig> render;

  DynamicsOptions dynamics() const;
  ROOptions restricted() const;
};

/// Reads a config document; missing keys keep their defaults, unknown keys
/// and non-positive limits are rejected with InvalidInput.
AnalysisConfig config_from_json(const Json& j);
/// Overlays the keys present in `j` onto `base`.
void merge_config(AnalysisConfig& base, const Json& j);
Json to_json(const AnalysisConfig& c);

struct ParsedMap {
  RationalMap map;
  std::vector<std::string> notices;
  Json echo;  // the input coefficients as given
};

/// {"numerator": [...], "denominator": [...]}, highest degree first. Entries
/// are strings ("3", "-2/5", "1/2+3/4i", "0.25") or JSON integers.
ParsedMap parse_map(const Json& j, double tolerance = 1e-9);

Json read_json_file(const std::string& path);

}  // namespace ratdyn
