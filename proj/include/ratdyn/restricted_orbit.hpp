#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratdyn/dynamics.hpp"

namespace ratdyn {

struct ROOptions {
  int depth = 12;           // forward search depth for witnesses and closures
  int preimage_depth = 6;   // backward search depth
  int critical_orbit_steps = 8;
  double tolerance = 1e-9;
  std::size_t exact_bit_cap = 4096;
  RootOptions roots{};
};

/// R^n(x) = R^m(y) with val(R^n, x) = val(R^m, y) = valency.
struct ROWitness {
  int n = 0;
  int m = 0;
  long long valency = 1;
};

/// First witness in (n + m, n) lexicographic order with n, m <= depth, or
/// nullopt (not found within depth).
std::optional<ROWitness> ro_related(const RationalMap& r, const SpherePoint& x, const SpherePoint& y, int depth,
                                   const std::vector<CriticalPoint>& crit, const ROOptions& opt = {});

struct ExposedOrbit {
  std::vector<SpherePoint> points;  // sorted
  int type = 1;
  bool contains_critical = false;
  bool critical_preperiodic = false;
  Membership membership = Membership::Undetermined;
  std::optional<AsymptoticValency> asymptotic_valency;  // types 2 and 3
  int size() const { return static_cast<int>(points.size()); }
};

struct UndecidedCandidate {
  std::vector<SpherePoint> points;
  std::string reason;
};

struct ExposedScan {
  std::vector<ExposedOrbit> orbits;  // minimal RO-orbits, by size then point order
  std::vector<SpherePoint> union_points;  // E_R
  std::vector<UndecidedCandidate> undecided;
  std::vector<SpherePoint> seeds;
  int max_seed_period = 0;
  int preimage_depth = 0;
  int forward_depth = 0;
  int critical_orbit_steps = 0;
  std::vector<std::string> notes;
};

/// Bounded search for finite restricted orbits seeded by critical points,
/// cycle points and critical forward orbits. `critical_fates` is parallel to
/// `crit`.
ExposedScan exposed_orbits(const RationalMap& r, const std::vector<CriticalPoint>& crit, const CycleScan& cycles,
                           const std::vector<OrbitFate>& critical_fates, const DynamicsOptions& dyn,
                           const ROOptions& opt, const std::vector<int>& declared_siegel = {});

/// Independent (four1) check: every preimage of multiplicity 1 of every point
/// of `a` lies in `a`.
bool satisfies_four1(const RationalMap& r, const std::vector<SpherePoint>& a, double tol, const RootOptions& ro = {});

struct JuliaPartition {
  std::vector<ExposedOrbit> in_julia;
  std::vector<ExposedOrbit> in_fatou;
  bool blocked = false;
  std::string obstruction;
};
JuliaPartition julia_exposed_partition(const std::vector<ExposedOrbit>& orbits);

}  // namespace ratdyn
