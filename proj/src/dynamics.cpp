#include "ratdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ratdyn/errors.hpp"

namespace ratdyn {

namespace {

constexpr double kPeriodMatchTol = 1e-6;
constexpr double kIndifferentBand = 1e-6;
constexpr double kUnitTol = 1e-9;
constexpr int kRootOfUnityCap = 64;

bool close_points(const SpherePoint& a, const SpherePoint& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.exactly_equal(b);
  return chordal_distance(a, b) <= tol;
}

/// Unit-normalized homogeneous iteration in double and long double.
class FastMap {
 public:
  explicit FastMap(const RationalMap& r) : d_(r.degree()) {
    for (int k = 0; k <= d_; ++k) {
      p_.push_back(r.numerator().coeff(k).to_complex());
      q_.push_back(r.denominator().coeff(k).to_complex());
      pl_.push_back(r.numerator().coeff(k).to_complex_ld());
      ql_.push_back(r.denominator().coeff(k).to_complex_ld());
    }
  }

  template <class C>
  static void step_impl(const std::vector<C>& p, const std::vector<C>& q, int d, C& z, C& w) {
    C a = p[static_cast<std::size_t>(d)];
    C b = q[static_cast<std::size_t>(d)];
    C wp(1);
    for (int k = d - 1; k >= 0; --k) {
      wp *= w;
      a = a * z + p[static_cast<std::size_t>(k)] * wp;
      b = b * z + q[static_cast<std::size_t>(k)] * wp;
    }
    using R = typename C::value_type;
    const R n = std::sqrt(std::norm(a) + std::norm(b));
    z = a / n;
    w = b / n;
  }

  void step(Complex& z, Complex& w) const { step_impl(p_, q_, d_, z, w); }
  void step(ComplexLD& z, ComplexLD& w) const { step_impl(pl_, ql_, d_, z, w); }

 private:
  int d_;
  std::vector<Complex> p_, q_;
  std::vector<ComplexLD> pl_, ql_;
};

double chordal_unit(Complex az, Complex aw, Complex bz, Complex bw) { return std::abs(az * bw - bz * aw); }

long double chordal_unit(ComplexLD az, ComplexLD aw, ComplexLD bz, ComplexLD bw) {
  return std::abs(az * bw - bz * aw);
}

void unit_ld(const SpherePoint& p, ComplexLD& z, ComplexLD& w) {
  z = p.z().to_complex_ld();
  w = p.w().to_complex_ld();
  const long double n = std::sqrt(std::norm(z) + std::norm(w));
  z /= n;
  w /= n;
}

struct Target {
  int cycle_id;
  int index;
  int pred_index;
  const SpherePoint* point;
  Complex z, w;
  ComplexLD zl, wl;
  CycleKind kind;
};

bool attracting_kind(CycleKind k) { return k == CycleKind::Attracting || k == CycleKind::SuperAttracting; }

/// Newton on R^p(z) - z with R^p and its derivative evaluated by iteration in
/// long double; better conditioned than the expanded period polynomial.
Complex polish_periodic(const RationalMap& r, int p, Complex z0) {
  const auto& P = r.numerator();
  const auto& Q = r.denominator();
  const Polynomial dP = P.derivative(), dQ = Q.derivative();
  ComplexLD z(z0.real(), z0.imag());
  auto residual = [&](ComplexLD x, ComplexLD& g, ComplexLD& dg) {
    ComplexLD w = x, dw(1.0L);
    for (int i = 0; i < p; ++i) {
      const ComplexLD q = Q.eval(w);
      if (std::abs(q) < 1e-12L || std::abs(w) > 1e8L) return false;
      const ComplexLD pw = P.eval(w);
      const ComplexLD deriv = (dP.eval(w) * q - pw * dQ.eval(w)) / (q * q);
      dw *= deriv;
      w = pw / q;
    }
    g = w - x;
    dg = dw - ComplexLD(1.0L);
    return std::isfinite(std::abs(g)) && std::isfinite(std::abs(dg));
  };
  ComplexLD g, dg;
  if (!residual(z, g, dg)) return z0;
  for (int it = 0; it < 4; ++it) {
    if (std::abs(dg) < 1e-6L || g == ComplexLD(0.0L)) break;
    const ComplexLD cand = z - g / dg;
    ComplexLD g2, dg2;
    if (!residual(cand, g2, dg2) || std::abs(g2) >= std::abs(g)) break;
    z = cand;
    g = g2;
    dg = dg2;
  }
  if (std::abs(z - ComplexLD(z0.real(), z0.imag())) > 1e-6L * std::max(1.0L, std::abs(z))) return z0;
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

Scalar power(const Scalar& x, int k) {
  Scalar out(1);
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

const char* to_string(CycleKind k) {
  switch (k) {
    case CycleKind::SuperAttracting: return "super_attracting";
    case CycleKind::Attracting: return "attracting";
    case CycleKind::Repelling: return "repelling";
    case CycleKind::RationallyIndifferent: return "rationally_indifferent";
    case CycleKind::IrrationallyIndifferent: return "irrationally_indifferent";
    case CycleKind::Ambiguous: return "ambiguous";
  }
  return "?";
}

const char* to_string(FateKind k) {
  switch (k) {
    case FateKind::ConvergesToCycle: return "converges_to_cycle";
    case FateKind::PreperiodicExactlyAt: return "preperiodic_exactly_at";
    case FateKind::LandsInDeclaredRotationDomain: return "lands_in_declared_rotation_domain";
    case FateKind::Unresolved: return "unresolved";
  }
  return "?";
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Julia: return "julia";
    case Membership::Fatou: return "fatou";
    case Membership::Undetermined: return "undetermined";
  }
  return "?";
}

std::vector<CriticalPoint> critical_points(const RationalMap& r, const RootOptions& opt) {
  const Polynomial& p = r.numerator();
  const Polynomial& q = r.denominator();
  Polynomial w = p.derivative() * q - p * q.derivative();
  if (!r.is_exact()) w = w.trimmed_relative(1e-13);
  std::vector<CriticalPoint> out;
  if (w.degree() >= 1)
    for (const auto& root : find_roots(w, opt)) out.push_back({SpherePoint(root.value), root.multiplicity + 1, root.multiplicity});
  const int at_inf = 2 * r.degree() - 2 - std::max(w.degree(), 0);
  if (at_inf > 0) out.push_back({SpherePoint::infinity(r.is_exact()), at_inf + 1, at_inf});
  return out;
}

CycleKind classify_multiplier(const Scalar& lambda, bool contains_critical, int& root_order, double& rotation,
                              bool& ambiguous_band) {
  root_order = 0;
  rotation = 0.0;
  ambiguous_band = false;
  if (lambda.is_exact() && lambda.is_zero()) return CycleKind::SuperAttracting;
  const double m = lambda.abs();
  if (!lambda.is_exact() && contains_critical && m <= kIndifferentBand) return CycleKind::SuperAttracting;
  bool unit = false;
  if (lambda.is_exact()) {
    unit = lambda.re_q() * lambda.re_q() + lambda.im_q() * lambda.im_q() == 1;
  } else {
    unit = std::abs(1.0 - m) <= kUnitTol;
  }
  if (!unit) {
    if (std::abs(1.0 - m) <= kIndifferentBand) {
      ambiguous_band = true;
      return CycleKind::Ambiguous;
    }
    return m < 1.0 ? CycleKind::Attracting : CycleKind::Repelling;
  }
  double theta = std::arg(lambda.to_complex()) / (2.0 * std::numbers::pi);
  if (theta < 0) theta += 1.0;
  if (theta >= 1.0) theta -= 1.0;
  for (int k = 1; k <= kRootOfUnityCap; ++k) {
    bool hit;
    if (lambda.is_exact()) {
      hit = power(lambda, k).is_one();
    } else {
      const double kt = k * theta;
      hit = std::abs(kt - std::round(kt)) <= kUnitTol;
    }
    if (hit) {
      root_order = k;
      rotation = theta;
      return CycleKind::RationallyIndifferent;
    }
  }
  rotation = theta;
  return CycleKind::IrrationallyIndifferent;
}

CycleScan periodic_cycles(const RationalMap& r, const std::vector<CriticalPoint>& crit, const DynamicsOptions& opt) {
  CycleScan scan;
  scan.requested_max_period = opt.max_period;
  const int d = r.degree();
  std::vector<PeriodicCycle> cycles;
  std::optional<RationalMap> rp;
  long long deg_p = 1;
  for (int p = 1; p <= opt.max_period; ++p) {
    deg_p *= d;
    if (deg_p + 1 > opt.root_degree_cap) {
      std::ostringstream os;
      os << "W_PERIOD_TRUNCATED: periods " << p << ".." << opt.max_period << " skipped (equation degree "
         << deg_p + 1 << " exceeds cap " << opt.root_degree_cap << ")";
      scan.warnings.push_back(os.str());
      break;
    }
    rp = rp ? compose(r, *rp) : r;
    const Polynomial z = Polynomial::linear(Scalar(0), Scalar(1));
    Polynomial f = rp->numerator() - z * rp->denominator();
    if (!rp->is_exact()) f = f.trimmed_relative(1e-13);
    std::vector<std::pair<SpherePoint, int>> sols;
    if (f.degree() >= 1)
      for (const auto& root : find_roots(f, opt.roots)) {
        Scalar v = root.value;
        if (!v.is_exact() && root.multiplicity == 1) v = Scalar::floating(polish_periodic(r, p, v.to_complex()));
        sols.emplace_back(SpherePoint(v), root.multiplicity);
      }
    const int inf_mult = static_cast<int>(deg_p) + 1 - std::max(f.degree(), 0);
    if (inf_mult > 0) sols.emplace_back(SpherePoint::infinity(r.is_exact()), inf_mult);
    if (p == 1)
      for (const auto& s : sols) scan.fixed_point_count += s.second;

    // Keep points of exact period p.
    std::vector<std::pair<SpherePoint, int>> exact_p;
    for (const auto& s : sols) {
      bool lower = false;
      for (int q = 1; q < p && !lower; ++q) {
        if (p % q != 0) continue;
        SpherePoint y = s.first;
        for (int j = 0; j < q; ++j) y = evaluate(r, y);
        lower = close_points(y, s.first, kPeriodMatchTol);
      }
      if (!lower) exact_p.push_back(s);
    }

    std::vector<bool> used(exact_p.size(), false);
    for (std::size_t i = 0; i < exact_p.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      PeriodicCycle c;
      c.period = p;
      c.fixed_point_multiplicity = exact_p[i].second;
      c.points.push_back(exact_p[i].first);
      SpherePoint y = exact_p[i].first;
      for (int k = 1; k < p; ++k) {
        y = evaluate(r, y);
        int best = -1;
        double best_d = kPeriodMatchTol;
        for (std::size_t j = 0; j < exact_p.size(); ++j) {
          if (used[j]) continue;
          if (y.is_exact() && exact_p[j].first.is_exact()) {
            if (y.exactly_equal(exact_p[j].first)) {
              best = static_cast<int>(j);
              best_d = 0.0;
            }
            continue;
          }
          const double dist = chordal_distance(y, exact_p[j].first);
          if (dist <= best_d) {
            best_d = dist;
            best = static_cast<int>(j);
          }
        }
        if (best >= 0) {
          used[static_cast<std::size_t>(best)] = true;
          y = exact_p[static_cast<std::size_t>(best)].first;
        } else {
          scan.warnings.push_back("W_CYCLE_GROUPING: orbit point " + y.to_string() + " not matched to a period root");
        }
        c.points.push_back(y);
      }
      Scalar lambda(1);
      for (const auto& pt : c.points) lambda *= chart_derivative(r, pt);
      c.multiplier = lambda;
      for (const auto& pt : c.points)
        for (const auto& cp : crit)
          if (close_points(pt, cp.point, kPeriodMatchTol)) c.contains_critical = true;
      bool ambiguous = false;
      c.kind = classify_multiplier(lambda, c.contains_critical, c.root_of_unity_order, c.rotation, ambiguous);
      if (ambiguous) {
        std::ostringstream os;
        os << "W_INDIFFERENT_AMBIGUOUS: |lambda| = " << lambda.abs() << " for the period-" << p
           << " cycle through " << c.points[0].to_string() << " lies inside the indifference band";
        scan.warnings.push_back(os.str());
      }
      auto least = std::min_element(c.points.begin(), c.points.end(), point_less);
      std::rotate(c.points.begin(), least, c.points.end());
      cycles.push_back(std::move(c));
    }
    scan.scanned_max_period = p;
  }
  std::stable_sort(cycles.begin(), cycles.end(), [](const PeriodicCycle& a, const PeriodicCycle& b) {
    if (a.period != b.period) return a.period < b.period;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      if (point_less(a.points[i], b.points[i])) return true;
      if (point_less(b.points[i], a.points[i])) return false;
    }
    return false;
  });
  for (std::size_t i = 0; i < cycles.size(); ++i) cycles[i].id = static_cast<int>(i);
  scan.cycles = std::move(cycles);
  return scan;
}

SpherePoint step_point(const RationalMap& r, const SpherePoint& x, std::size_t bit_cap) {
  SpherePoint y = evaluate(r, x);
  if (y.is_exact() && y.bit_size() > bit_cap) y = y.to_floating();
  return y;
}

int valency_from_critical(const SpherePoint& x, const std::vector<CriticalPoint>& crit, double tol) {
  for (const auto& c : crit)
    if (close_points(x, c.point, tol)) return c.valency;
  return 1;
}

OrbitFate orbit_fate(const RationalMap& r, const SpherePoint& x, const std::vector<PeriodicCycle>& cycles,
                     const std::vector<CriticalPoint>& crit, const DynamicsOptions& opt,
                     const std::vector<DeclaredDomain>& domains) {
  const double tol = opt.tolerance;
  std::vector<Target> targets;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      Target t{};
      t.cycle_id = c.id;
      t.index = static_cast<int>(i);
      t.pred_index = static_cast<int>((i + c.points.size() - 1) % c.points.size());
      t.point = &c.points[i];
      c.points[i].unit_coords(t.z, t.w);
      unit_ld(c.points[i], t.zl, t.wl);
      t.kind = c.kind;
      targets.push_back(t);
    }
  auto cycle_of = [&](int id) -> const PeriodicCycle& { return cycles[static_cast<std::size_t>(id)]; };

  OrbitFate fate;
  SpherePoint cur = x;
  int step = 0;
  long long vprod = 1;

  auto finish = [&](FateKind kind, int cycle_id, int index) {
    fate.kind = kind;
    fate.cycle_id = cycle_id;
    fate.cycle_index = index;
    fate.step = step;
    fate.steps_used = step;
    fate.valency_product = vprod;
    return fate;
  };

  // Exact phase.
  std::optional<SpherePoint> prev;
  while (cur.is_exact() && cur.bit_size() <= opt.exact_bit_cap && step <= opt.orbit_budget) {
    for (const auto& t : targets)
      if (t.point->is_exact() && cur.exactly_equal(*t.point)) return finish(FateKind::PreperiodicExactlyAt, t.cycle_id, t.index);
    for (const auto& dom : domains)
      for (const auto& m : dom.members)
        if (same_point(cur, m, tol)) {
          fate.region_id = dom.region_id;
          return finish(FateKind::LandsInDeclaredRotationDomain, -1, -1);
        }
    Complex cz, cw;
    cur.unit_coords(cz, cw);
    for (const auto& t : targets) {
      if (t.point->is_exact() || chordal_unit(cz, cw, t.z, t.w) > tol) continue;
      const auto& pred = cycle_of(t.cycle_id).points[static_cast<std::size_t>(t.pred_index)];
      if (prev && chordal_distance(*prev, pred) < 1e-4 && attracting_kind(t.kind))
        return finish(FateKind::ConvergesToCycle, t.cycle_id, t.index);
      ComplexLD lz, lw;
      unit_ld(cur, lz, lw);
      if (chordal_unit(lz, lw, t.zl, t.wl) <= tol) return finish(FateKind::PreperiodicExactlyAt, t.cycle_id, t.index);
    }
    if (step == opt.orbit_budget) break;
    vprod *= valency_from_critical(cur, crit, tol);
    prev = cur;
    cur = evaluate(r, cur);
    ++step;
  }
  if (step >= opt.orbit_budget && cur.is_exact()) return finish(FateKind::Unresolved, -1, -1);

  // Floating phase with a long double shadow orbit.
  const FastMap fm(r);
  Complex z, w;
  cur.unit_coords(z, w);
  ComplexLD zl, wl;
  unit_ld(cur, zl, wl);
  std::vector<std::pair<Complex, Complex>> crit_unit, dom_unit;
  for (const auto& c : crit) {
    Complex a, b;
    c.point.unit_coords(a, b);
    crit_unit.emplace_back(a, b);
  }
  std::vector<int> dom_ids;
  for (const auto& dom : domains)
    for (const auto& m : dom.members) {
      Complex a, b;
      m.unit_coords(a, b);
      dom_unit.emplace_back(a, b);
      dom_ids.push_back(dom.region_id);
    }
  std::vector<double> last_parabolic(cycles.size(), 2.0);
  bool have_prev = prev.has_value();
  Complex pz(0.0), pw(0.0);
  if (prev) prev->unit_coords(pz, pw);

  for (; step <= opt.orbit_budget; ++step) {
    for (std::size_t i = 0; i < dom_unit.size(); ++i)
      if (chordal_unit(z, w, dom_unit[i].first, dom_unit[i].second) <= tol) {
        fate.region_id = dom_ids[i];
        return finish(FateKind::LandsInDeclaredRotationDomain, -1, -1);
      }
    for (const auto& t : targets) {
      if (chordal_unit(z, w, t.z, t.w) > tol) continue;
      const auto& pp = cycle_of(t.cycle_id).points[static_cast<std::size_t>(t.pred_index)];
      Complex qz, qw;
      pp.unit_coords(qz, qw);
      const bool near_pred = have_prev && chordal_unit(pz, pw, qz, qw) < 1e-4;
      if (near_pred && attracting_kind(t.kind)) return finish(FateKind::ConvergesToCycle, t.cycle_id, t.index);
      if (!near_pred && chordal_unit(zl, wl, t.zl, t.wl) <= tol)
        return finish(FateKind::PreperiodicExactlyAt, t.cycle_id, t.index);
      if (attracting_kind(t.kind)) return finish(FateKind::ConvergesToCycle, t.cycle_id, t.index);
    }
    if (step > 0 && step % 1000 == 0) {
      for (const auto& c : cycles) {
        if (c.kind != CycleKind::RationallyIndifferent) continue;
        double dmin = 2.0;
        for (const auto& pt : c.points) {
          Complex a, b;
          pt.unit_coords(a, b);
          dmin = std::min(dmin, chordal_unit(z, w, a, b));
        }
        double& last = last_parabolic[static_cast<std::size_t>(c.id)];
        if (dmin < 1e-2 && dmin < last) return finish(FateKind::ConvergesToCycle, c.id, -1);
        last = dmin;
      }
    }
    if (step == opt.orbit_budget) break;
    for (std::size_t i = 0; i < crit_unit.size(); ++i)
      if (chordal_unit(z, w, crit_unit[i].first, crit_unit[i].second) <= tol) {
        vprod *= crit[i].valency;
        break;
      }
    pz = z;
    pw = w;
    have_prev = true;
    fm.step(z, w);
    fm.step(zl, wl);
  }
  return finish(FateKind::Unresolved, -1, -1);
}

AsymptoticValency asymptotic_valency(const OrbitFate& fate, const std::vector<PeriodicCycle>& cycles) {
  AsymptoticValency v;
  switch (fate.kind) {
    case FateKind::Unresolved:
      throw Error(ErrorCode::AsymptoticValencyUndetermined,
                  "asymptotic valency undetermined: orbit unresolved after " + std::to_string(fate.steps_used) + " steps");
    case FateKind::PreperiodicExactlyAt:
      if (cycles[static_cast<std::size_t>(fate.cycle_id)].contains_critical) {
        v.infinite = true;
        return v;
      }
      [[fallthrough]];
    default:
      v.value = fate.valency_product;
      return v;
  }
}

Membership membership_from_fate(const OrbitFate& fate, const std::vector<PeriodicCycle>& cycles,
                                const std::vector<int>& declared_siegel) {
  switch (fate.kind) {
    case FateKind::Unresolved: return Membership::Undetermined;
    case FateKind::ConvergesToCycle:
    case FateKind::LandsInDeclaredRotationDomain: return Membership::Fatou;
    case FateKind::PreperiodicExactlyAt: break;
  }
  const auto& c = cycles[static_cast<std::size_t>(fate.cycle_id)];
  switch (c.kind) {
    case CycleKind::SuperAttracting:
    case CycleKind::Attracting: return Membership::Fatou;
    case CycleKind::Repelling:
    case CycleKind::RationallyIndifferent: return Membership::Julia;
    case CycleKind::IrrationallyIndifferent:
      return std::find(declared_siegel.begin(), declared_siegel.end(), c.id) != declared_siegel.end()
                 ? Membership::Fatou
                 : Membership::Undetermined;
    case CycleKind::Ambiguous: return Membership::Undetermined;
  }
  return Membership::Undetermined;
}

}  // namespace ratdyn
