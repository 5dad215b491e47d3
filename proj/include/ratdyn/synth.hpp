#pragma once

#include <string>
#include <vector>

#include "ratdyn/algebra.hpp"
#include "ratdyn/fatou_atlas.hpp"

namespace ratdyn {

/// Inventory symbols used as origins: "crit:<i>", "cycle:<id>", "orbit:<k>", "region:<id>".
std::string crit_symbol(int index);
std::string cycle_symbol(int id);
std::string orbit_symbol(int index);
std::string region_symbol(int id);

/// Quotient contribution of one Julia exposed orbit (not normalized):
/// type 1 C(T) (x) M_n, type 2 M_n (x) C(T) (x) C^d, type 3 M_n (x) C^d.
algebra::Expr julia_orbit_algebra(const ExposedOrbit& orbit, const std::string& symbol);

/// Attributes of the simple purely infinite Julia ideal.
std::vector<std::string> julia_ideal_attributes();

/// `orbit_index` maps each Julia orbit to its index in the exposed list.
algebra::ExtensionSeq julia_extension(const JuliaPartition& partition, const std::vector<int>& orbit_index = {});

algebra::ExtensionSeq region_extension(const StableRegion& region);

/// Algebra attached to one iota_c class, by the behaviour of its critical orbit.
algebra::Expr iota_c_algebra(const CriticalOrbitRecord& rec);

struct Decomposition {
  algebra::ExtensionSeq julia_fatou;
  std::vector<algebra::ExtensionSeq> fatou_regions;
  algebra::Expr fatou_sum;  // C*_r(F_R) as a sum of region totals
  algebra::ExtensionSeq julia;
  algebra::SixSquare square;
  std::vector<std::string> obstructions;
};

Decomposition full_decomposition(const Atlas& atlas, const algebra::ExtensionSeq& julia);

}  // namespace ratdyn
