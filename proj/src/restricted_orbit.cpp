#include "ratdyn/restricted_orbit.hpp"

#include <algorithm>
#include <sstream>

#include "ratdyn/errors.hpp"

namespace ratdyn {

namespace {

constexpr std::size_t kMaxExposed = 4;
constexpr long long kValencyCeiling = 1LL << 50;

/// Exact identity when both points are exact, otherwise a coincidence that
/// survives tightening the tolerance by 10^3. Ambiguous cases throw.
bool coincident(const SpherePoint& a, const SpherePoint& b, double tol) {
  switch (coincide(a, b, tol)) {
    case Coincidence::Equal: return true;
    case Coincidence::Distinct: return false;
    case Coincidence::Ambiguous: break;
  }
  throw Error(ErrorCode::ExposureUndecided,
              "coincidence of " + a.to_string() + " and " + b.to_string() + " does not survive tolerance tightening");
}

int index_of(const std::vector<SpherePoint>& set, const SpherePoint& p, double tol) {
  for (std::size_t i = 0; i < set.size(); ++i)
    if (coincident(set[i], p, tol)) return static_cast<int>(i);
  return -1;
}

class Explorer {
 public:
  Explorer(const RationalMap& r, const std::vector<CriticalPoint>& crit, const ROOptions& opt)
      : r_(r), crit_(crit), opt_(opt) {
    const int steps = std::max(opt.preimage_depth, opt.critical_orbit_steps);
    for (const auto& c : crit) {
      SpherePoint y = c.point;
      for (int j = 1; j <= steps; ++j) {
        y = step_point(r, y, opt.exact_bit_cap);
        critical_orbit_.push_back(y);
      }
    }
  }

  const std::vector<SpherePoint>& critical_orbit() const { return critical_orbit_; }

  const std::vector<Preimage>& preimages_of(const SpherePoint& y) {
    for (const auto& [p, pre] : cache_)
      if (coincident(p, y, opt_.tolerance)) return pre;
    cache_.emplace_back(y, preimages(r_, y, opt_.roots));
    return cache_.back().second;
  }

  int valency(const SpherePoint& x) const { return valency_from_critical(x, crit_, opt_.tolerance); }

  bool on_critical_orbit(const SpherePoint& x) const {
    for (const auto& p : critical_orbit_)
      if (coincident(p, x, opt_.tolerance)) return true;
    return false;
  }

  /// RO(a) when it has at most 4 points (within the search bounds), else nullopt.
  std::optional<std::vector<SpherePoint>> closure(const SpherePoint& a) {
    std::vector<SpherePoint> s{a};
    std::vector<std::pair<SpherePoint, long long>> seen_forward;
    SpherePoint ak = a;
    long long vk = 1;
    for (int k = 0; k <= opt_.depth; ++k) {
      if (k > 0) {
        vk *= valency(ak);
        ak = step_point(r_, ak, opt_.exact_bit_cap);
      }
      if (vk > kValencyCeiling) break;
      bool repeated = false;
      for (const auto& [p, v] : seen_forward)
        if (v == vk && coincident(p, ak, opt_.tolerance)) repeated = true;
      if (repeated) break;
      seen_forward.emplace_back(ak, vk);

      if (vk == 1 && index_of(s, ak, opt_.tolerance) < 0) {
        s.push_back(ak);
        if (s.size() > kMaxExposed) return std::nullopt;
      }
      // Backward search for y with R^n(y) = a_k and val(R^n, y) = v_k.
      std::vector<std::pair<SpherePoint, long long>> frontier{{ak, 1}};
      std::vector<std::pair<SpherePoint, long long>> visited{{ak, 1}};
      for (int n = 1; n <= opt_.preimage_depth && !frontier.empty(); ++n) {
        std::vector<std::pair<SpherePoint, long long>> next;
        for (const auto& [y, v] : frontier) {
          for (const auto& pre : preimages_of(y)) {
            const long long nv = v * pre.multiplicity;
            if (nv > vk) continue;
            if (nv < vk && !on_critical_orbit(pre.point)) continue;
            bool dup = false;
            for (const auto& [p, pv] : visited)
              if (pv == nv && coincident(p, pre.point, opt_.tolerance)) dup = true;
            if (dup) continue;
            visited.emplace_back(pre.point, nv);
            if (nv == vk && index_of(s, pre.point, opt_.tolerance) < 0) {
              s.push_back(pre.point);
              if (s.size() > kMaxExposed) return std::nullopt;
            }
            next.emplace_back(pre.point, nv);
          }
        }
        frontier = std::move(next);
      }
    }
    std::sort(s.begin(), s.end(), point_less);
    return s;
  }

 private:
  const RationalMap& r_;
  const std::vector<CriticalPoint>& crit_;
  const ROOptions& opt_;
  std::vector<SpherePoint> critical_orbit_;
  std::vector<std::pair<SpherePoint, std::vector<Preimage>>> cache_;
};

bool same_set(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (index_of(b, p, tol) < 0) return false;
  return true;
}

std::string set_text(const std::vector<SpherePoint>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].to_string();
  return out + "}";
}

bool set_less(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (point_less(a[i], b[i])) return true;
    if (point_less(b[i], a[i])) return false;
  }
  return false;
}

}  // namespace

std::optional<ROWitness> ro_related(const RationalMap& r, const SpherePoint& x, const SpherePoint& y, int depth,
                                   const std::vector<CriticalPoint>& crit, const ROOptions& opt) {
  auto orbit = [&](const SpherePoint& start, std::vector<SpherePoint>& pts, std::vector<long long>& vals) {
    pts.push_back(start);
    vals.push_back(1);
    for (int k = 1; k <= depth; ++k) {
      const SpherePoint& prev = pts.back();
      vals.push_back(vals.back() * valency_from_critical(prev, crit, opt.tolerance));
      pts.push_back(step_point(r, prev, opt.exact_bit_cap));
    }
  };
  std::vector<SpherePoint> xs, ys;
  std::vector<long long> xv, yv;
  orbit(x, xs, xv);
  orbit(y, ys, yv);
  for (int s = 0; s <= 2 * depth; ++s)
    for (int n = std::max(0, s - depth); n <= std::min(s, depth); ++n) {
      const int m = s - n;
      const auto& a = xs[static_cast<std::size_t>(n)];
      const auto& b = ys[static_cast<std::size_t>(m)];
      if (xv[static_cast<std::size_t>(n)] != yv[static_cast<std::size_t>(m)]) continue;
      if (coincide(a, b, opt.tolerance) == Coincidence::Equal) return ROWitness{n, m, xv[static_cast<std::size_t>(n)]};
    }
  return std::nullopt;
}

bool satisfies_four1(const RationalMap& r, const std::vector<SpherePoint>& a, double tol, const RootOptions& ro) {
  for (const auto& p : a)
    for (const auto& pre : preimages(r, p, ro)) {
      if (pre.multiplicity != 1) continue;
      bool found = false;
      for (const auto& q : a)
        if (coincide(q, pre.point, tol) == Coincidence::Equal) found = true;
      if (!found) return false;
    }
  return true;
}

ExposedScan exposed_orbits(const RationalMap& r, const std::vector<CriticalPoint>& crit, const CycleScan& cycles,
                           const std::vector<OrbitFate>& critical_fates, const DynamicsOptions& dyn,
                           const ROOptions& opt, const std::vector<int>& declared_siegel) {
  ExposedScan scan;
  scan.max_seed_period = cycles.scanned_max_period;
  scan.preimage_depth = opt.preimage_depth;
  scan.forward_depth = opt.depth;
  scan.critical_orbit_steps = opt.critical_orbit_steps;
  const double tol = opt.tolerance;

  Explorer ex(r, crit, opt);
  auto add_seed = [&](const SpherePoint& p) {
    for (const auto& s : scan.seeds)
      if (coincide(s, p, tol) == Coincidence::Equal) return;
    scan.seeds.push_back(p);
  };
  for (const auto& c : crit) add_seed(c.point);
  for (const auto& c : cycles.cycles)
    for (const auto& p : c.points) add_seed(p);
  for (const auto& c : crit) {
    SpherePoint y = c.point;
    for (int j = 1; j <= opt.critical_orbit_steps; ++j) {
      y = step_point(r, y, opt.exact_bit_cap);
      add_seed(y);
    }
  }

  auto critical_index = [&](const SpherePoint& p) -> int {
    for (std::size_t i = 0; i < crit.size(); ++i)
      if (coincide(crit[i].point, p, tol) == Coincidence::Equal) return static_cast<int>(i);
    return -1;
  };
  auto covered = [&](const SpherePoint& p) {
    for (const auto& o : scan.orbits)
      for (const auto& q : o.points)
        if (coincide(q, p, tol) == Coincidence::Equal) return true;
    for (const auto& u : scan.undecided)
      for (const auto& q : u.points)
        if (coincide(q, p, tol) == Coincidence::Equal) return true;
    return false;
  };

  for (const auto& seed : scan.seeds) {
    if (covered(seed)) continue;
    std::vector<SpherePoint> s;
    try {
      auto cl = ex.closure(seed);
      if (!cl) continue;
      s = std::move(*cl);
      for (const auto& p : s) {
        auto other = ex.closure(p);
        if (!other || !same_set(*other, s, tol))
          throw Error(ErrorCode::ExposureUndecided, "closure of " + p.to_string() + " differs within the search bounds");
      }
      if (!satisfies_four1(r, s, tol, opt.roots))
        throw Error(ErrorCode::ExposureUndecided, "candidate fails the preimage condition on re-check");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExposureUndecided && e.code() != ErrorCode::MultiplicityAmbiguous &&
          e.code() != ErrorCode::RootFindingFailed && e.code() != ErrorCode::ValencyAmbiguous)
        throw;
      if (s.empty()) s.push_back(seed);
      scan.undecided.push_back({s, std::string("exposure undecided: ") + e.what()});
      continue;
    }

    ExposedOrbit orbit;
    orbit.points = s;
    int ci = -1;
    for (const auto& p : s) {
      const int i = critical_index(p);
      if (i >= 0 && crit[static_cast<std::size_t>(i)].valency > 1 && ci < 0) ci = i;
    }
    orbit.contains_critical = ci >= 0;
    OrbitFate fate;
    if (ci >= 0) {
      fate = critical_fates[static_cast<std::size_t>(ci)];
      if (fate.kind == FateKind::Unresolved) {
        scan.undecided.push_back(
            {s, "exposure undecided: critical member " + crit[static_cast<std::size_t>(ci)].point.to_string() +
                    " has an unresolved orbit after " + std::to_string(fate.steps_used) + " steps"});
        continue;
      }
      orbit.critical_preperiodic = fate.kind == FateKind::PreperiodicExactlyAt;
      orbit.type = orbit.critical_preperiodic ? 2 : 3;
      orbit.asymptotic_valency = asymptotic_valency(fate, cycles.cycles);
    } else {
      orbit.type = 1;
      fate = orbit_fate(r, s.front(), cycles.cycles, crit, dyn);
    }
    orbit.membership = membership_from_fate(fate, cycles.cycles, declared_siegel);
    scan.orbits.push_back(std::move(orbit));
  }

  std::sort(scan.orbits.begin(), scan.orbits.end(),
            [](const ExposedOrbit& a, const ExposedOrbit& b) { return set_less(a.points, b.points); });
  for (const auto& o : scan.orbits)
    for (const auto& p : o.points) scan.union_points.push_back(p);
  std::sort(scan.union_points.begin(), scan.union_points.end(), point_less);

  for (const auto& o : scan.orbits)
    if (o.type == 3)
      scan.notes.push_back("N_TYPE3_LABEL: orbit " + set_text(o.points) +
                           " is typed 3 (critical member not pre-periodic); the source labels its analogous Rees-family "
                           "example type 2 while applying the type-3 quotient formula");
  {
    std::ostringstream os;
    os << "N_SEARCH_BOUNDS: exposure searched from " << scan.seeds.size() << " seeds (cycles of period <= "
       << scan.max_seed_period << ", critical orbits of " << scan.critical_orbit_steps
       << " steps), forward depth " << scan.forward_depth << ", preimage depth " << scan.preimage_depth;
    scan.notes.push_back(os.str());
  }
  return scan;
}

JuliaPartition julia_exposed_partition(const std::vector<ExposedOrbit>& orbits) {
  JuliaPartition out;
  for (const auto& o : orbits) {
    switch (o.membership) {
      case Membership::Julia: out.in_julia.push_back(o); break;
      case Membership::Fatou: out.in_fatou.push_back(o); break;
      case Membership::Undetermined:
        out.blocked = true;
        out.obstruction += (out.obstruction.empty() ? "" : "; ") + std::string("membership of ") + set_text(o.points) +
                           " undetermined";
        break;
    }
  }
  return out;
}

}  // namespace ratdyn
