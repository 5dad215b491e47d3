#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratdyn/synth.hpp"

namespace ratdyn {

struct IsotropyGroup {
  enum class Kind { Trivial, Z, FiniteCyclic, ZPlusFiniteCyclic, SubgroupOfQmodZ };
  Kind kind = Kind::Trivial;
  long long order = 0;  // v for FiniteCyclic, d for ZPlusFiniteCyclic

  std::string to_string() const;
  /// Cardinality class of the dual: "single", "finite <v>", "circle", "circle x <d>", "cantor".
  std::string dual_class() const;
  /// C*(Is) as an algebra expression (C, C^v, C(T), C(T) (x) C^d, C(K)).
  algebra::Expr group_algebra() const;
  bool operator==(const IsotropyGroup& o) const { return kind == o.kind && order == o.order; }
};

/// Facts about a point needed to name its isotropy group. Missing facts are
/// reported as UnresolvedContext errors.
struct PointContext {
  std::optional<bool> critical;
  std::optional<bool> periodic;
  std::optional<bool> preperiodic;              // critical points
  std::optional<bool> lands_on_critical_cycle;  // critical pre-periodic points
  std::optional<AsymptoticValency> valency;     // critical points
};

IsotropyGroup isotropy_of(const PointContext& ctx);

enum class CoSupport { Julia, ExposedOrbit, OrbitPlusJulia, ClosureOfFreeOrbit };
const char* to_string(CoSupport c);

struct PrimitiveIdealEntry {
  CoSupport co_support = CoSupport::Julia;
  int ref = -1;             // orbit index, iota class index or region id
  std::string description;  // human-readable co-support
  bool family = false;      // parametrized by the dual of `isotropy`
  IsotropyGroup isotropy;
  /// Quotient C*_r(R)/I: a single algebra (Julia, exposed orbits) or rows of
  /// a diagram with exact rows (cases iii and iv).
  std::optional<algebra::Expr> quotient;
  /// Exposed orbits: C*(Is_x) (x) M_n, the quotient by the kernel of the co-support.
  std::optional<algebra::Expr> co_support_algebra;
  std::vector<algebra::ExtensionSeq> quotient_rows;
  std::string quotient_note;
  bool simple = false;
};

enum class T0Verdict { NonT0, T0, Undetermined };
const char* to_string(T0Verdict v);

struct PrimitiveCatalog {
  std::vector<PrimitiveIdealEntry> entries;
  T0Verdict t0 = T0Verdict::Undetermined;
  std::string t0_reason;
  bool julia_is_sphere = false;
  std::vector<std::string> simple_quotients;
  std::vector<std::string> obstructions;
};

struct CatalogInput {
  const Atlas& atlas;
  const ExposedScan& exposed;
  const JuliaPartition& julia;
  const Decomposition& decomposition;
  const CycleScan& cycles;
  const std::vector<CriticalPoint>& crit;
  const std::vector<OrbitFate>& fates;
};

PrimitiveCatalog primitive_catalog(const CatalogInput& in);

algebra::Json to_json(const PrimitiveCatalog& c);

}  // namespace ratdyn
