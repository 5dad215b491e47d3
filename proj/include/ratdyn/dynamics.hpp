#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratdyn/rational_map.hpp"

namespace ratdyn {

struct DynamicsOptions {
  int max_period = 4;
  /// Periods whose fixed-point equation exceeds this degree are skipped.
  int root_degree_cap = 80;
  int orbit_budget = 10000;
  double tolerance = 1e-9;
  /// Exact iteration switches to floating once coordinates exceed this many bits.
  std::size_t exact_bit_cap = 4096;
  RootOptions roots{};
};

struct CriticalPoint {
  SpherePoint point;
  int valency = 2;       // local degree
  int multiplicity = 1;  // order as a zero of the critical divisor (valency - 1)
};

/// Finite roots of P'Q - PQ' plus infinity when critical.
std::vector<CriticalPoint> critical_points(const RationalMap& r, const RootOptions& opt = {});

enum class CycleKind { SuperAttracting, Attracting, Repelling, RationallyIndifferent, IrrationallyIndifferent, Ambiguous };
const char* to_string(CycleKind k);

struct PeriodicCycle {
  int id = 0;
  int period = 1;
  std::vector<SpherePoint> points;  // rotated so the least point comes first
  Scalar multiplier;
  CycleKind kind = CycleKind::Repelling;
  int root_of_unity_order = 0;  // RationallyIndifferent: lambda^k = 1
  double rotation = 0.0;        // IrrationallyIndifferent: arg(lambda) / 2pi in [0, 1)
  bool contains_critical = false;
  int fixed_point_multiplicity = 1;  // multiplicity as a root of the period equation
};

struct CycleScan {
  std::vector<PeriodicCycle> cycles;
  int requested_max_period = 0;
  int scanned_max_period = 0;  // < requested when the degree cap truncated the scan
  std::vector<std::string> warnings;
  /// Period-1 solutions counted with multiplicity (equals d + 1).
  int fixed_point_count = 0;
};

/// All cycles of exact period <= max_period (subject to the degree cap),
/// sorted by period then point order, ids assigned in that order.
CycleScan periodic_cycles(const RationalMap& r, const std::vector<CriticalPoint>& crit, const DynamicsOptions& opt);

/// Classifies a multiplier against the indifference band.
CycleKind classify_multiplier(const Scalar& lambda, bool contains_critical, int& root_order, double& rotation,
                              bool& ambiguous_band);

enum class FateKind { ConvergesToCycle, PreperiodicExactlyAt, LandsInDeclaredRotationDomain, Unresolved };
const char* to_string(FateKind k);

struct OrbitFate {
  FateKind kind = FateKind::Unresolved;
  int cycle_id = -1;
  int cycle_index = -1;  // which cycle point was reached
  int region_id = -1;    // declared rotation domain
  int step = 0;          // landing step, or step at which convergence was detected
  int steps_used = 0;
  /// Product of local valencies along the orbit before landing/convergence.
  long long valency_product = 1;
};

/// Points known to lie in a declared rotation domain (Siegel disk or Herman ring).
struct DeclaredDomain {
  int region_id = -1;
  std::vector<SpherePoint> members;
};

OrbitFate orbit_fate(const RationalMap& r, const SpherePoint& x, const std::vector<PeriodicCycle>& cycles,
                     const std::vector<CriticalPoint>& crit, const DynamicsOptions& opt,
                     const std::vector<DeclaredDomain>& domains = {});

struct AsymptoticValency {
  bool infinite = false;
  long long value = 1;
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

/// lim val(R^k, x); throws AsymptoticValencyUndetermined for unresolved fates.
AsymptoticValency asymptotic_valency(const OrbitFate& fate, const std::vector<PeriodicCycle>& cycles);

enum class Membership { Julia, Fatou, Undetermined };
const char* to_string(Membership m);

/// Julia/Fatou membership implied by a fate. `declared_siegel` lists cycle ids
/// declared as Siegel centres.
Membership membership_from_fate(const OrbitFate& fate, const std::vector<PeriodicCycle>& cycles,
                                const std::vector<int>& declared_siegel = {});

/// R(x), switching to floating coordinates once exact ones exceed bit_cap bits.
SpherePoint step_point(const RationalMap& r, const SpherePoint& x, std::size_t bit_cap = 4096);

/// Local valency at x via the critical point list (1 when x is not critical).
int valency_from_critical(const SpherePoint& x, const std::vector<CriticalPoint>& crit, double tol);

}  // namespace ratdyn
