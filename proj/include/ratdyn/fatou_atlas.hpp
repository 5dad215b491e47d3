#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratdyn/restricted_orbit.hpp"

namespace ratdyn {

enum class RegionType { SuperAttracting, Attracting, Parabolic, Siegel, Herman };
const char* to_string(RegionType t);

/// User assertion of a rotation domain; never inferred numerically.
struct Declaration {
  enum class Kind { Siegel, Herman };
  Kind kind = Kind::Siegel;
  std::optional<SpherePoint> anchor;  // Siegel: a point of the irrationally indifferent cycle
  double theta = 0.0;
  int period = 1;
  std::vector<SpherePoint> members;  // optional points known to lie in the domain
};

struct CriticalOrbitRecord {
  int critical_index = -1;
  SpherePoint point;
  int region_id = -1;
  bool preperiodic = false;
  AsymptoticValency valency;
  bool ro_representative = true;
  int representative = -1;  // index (within the region) of the class representative
  int exposed_size = 0;     // #RO(c) when exposed, else 0
};

struct StableRegion {
  int id = 0;
  RegionType type = RegionType::SuperAttracting;
  int anchor_cycle = -1;  // absent (-1) for Herman
  int period = 1;
  long long local_degree = 1;  // super-attracting: product of valencies along the cycle
  Scalar multiplier;
  double theta = 0.0;
  std::vector<CriticalOrbitRecord> records;
  bool has_noncritical_periodic = false;
  int anchor_exposed_size = 0;  // #RO(q) when the anchor point is exposed
  bool blocked = false;
  std::string obstruction;
  int declaration = -1;
};

struct IotaClass {
  SpherePoint representative;
  int region_id = -1;
  int cycle_id = -1;        // iota_p
  int critical_index = -1;  // iota_c
  int exposed_size = 0;
};

struct Atlas {
  std::vector<StableRegion> regions;
  std::vector<IotaClass> iota_p;
  std::vector<IotaClass> iota_c;
  std::vector<int> unresolved_critical;  // presumed in the Julia set
  std::vector<std::string> warnings;
};

/// `fates` is parallel to `crit`; fates landing in declared domains refer to
/// declaration indices.
Atlas build_atlas(const RationalMap& r, const CycleScan& cycles, const std::vector<CriticalPoint>& crit,
                  const std::vector<OrbitFate>& fates, const ExposedScan& exposed,
                  const std::vector<Declaration>& declarations, const ROOptions& ro);

/// Cycle ids of accepted Siegel declarations (anchors matched to irrationally
/// indifferent cycles).
std::vector<int> declared_siegel_cycles(const CycleScan& cycles, const std::vector<Declaration>& declarations,
                                        double tol);

/// #RO(x) when x lies in an exposed orbit, else 0.
int exposed_size_of(const SpherePoint& x, const ExposedScan& exposed, double tol);

}  // namespace ratdyn
