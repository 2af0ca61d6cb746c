#include "heng/phases.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "heng/errors.hpp"

namespace heng {

SweepParam parse_sweep_param(const std::string& name) {
  if (name == "T_h") return SweepParam::Th;
  if (name == "T_c") return SweepParam::Tc;
  if (name == "mu") return SweepParam::Mu;
  if (name == "alpha_c") return SweepParam::AlphaC;
  if (name == "alpha_h") return SweepParam::AlphaH;
  if (name == "gamma") return SweepParam::Gamma;
  if (name == "E0") return SweepParam::E0;
  if (name == "g_c") return SweepParam::Gc;
  if (name == "M") return SweepParam::M;
  throw ConfigError("unknown sweep parameter '" + name +
                    "' (T_h | T_c | mu | alpha_c | alpha_h | gamma | E0 | g_c | M)");
}

std::string to_string(SweepParam p) {
  switch (p) {
    case SweepParam::Th: return "T_h";
    case SweepParam::Tc: return "T_c";
    case SweepParam::Mu: return "mu";
    case SweepParam::AlphaC: return "alpha_c";
    case SweepParam::AlphaH: return "alpha_h";
    case SweepParam::Gamma: return "gamma";
    case SweepParam::E0: return "E0";
    case SweepParam::Gc: return "g_c";
    case SweepParam::M: return "M";
  }
  return "?";
}

ModelInputs with_param(ModelInputs base, SweepParam p, double value) {
  switch (p) {
    case SweepParam::Th: base.hot.temperature = value; break;
    case SweepParam::Tc: base.cold.temperature = value; break;
    case SweepParam::Mu: base.hot.mu = value; break;
    case SweepParam::AlphaC: base.cold.alpha = value; break;
    case SweepParam::AlphaH: base.hot.alpha = value; break;
    case SweepParam::Gamma: base.engine.gamma = value; break;
    case SweepParam::E0: base.hot.center_or_edge = value; break;
    case SweepParam::Gc: base.engine.g_c = value; break;
    case SweepParam::M: base.engine.M = static_cast<long>(std::llround(value)); break;
  }
  return base;
}

std::vector<double> axis_values(const SweepAxis& axis) {
  if (axis.count < 2) throw ConfigError("sweep axis count must be >= 2");
  if (axis.log_scale && !(axis.lo > 0.0 && axis.hi > 0.0))
    throw ConfigError("log-scaled sweep axis requires positive bounds");
  std::vector<double> v(axis.count);
  for (int i = 0; i < axis.count; ++i) {
    const double t = static_cast<double>(i) / (axis.count - 1);
    v[i] = axis.log_scale
               ? axis.lo * std::exp(t * std::log(axis.hi / axis.lo))
               : axis.lo + t * (axis.hi - axis.lo);
  }
  return v;
}

PhaseDiagram sweep(const ModelInputs& fixed, const SweepAxis& axis1,
                   const SweepAxis& axis2, const CondensateOptions& solve_options,
                   ExecPolicy policy) {
  PhaseDiagram out;
  out.axis1 = axis1;
  out.axis2 = axis2;
  out.a1 = axis_values(axis1);
  out.a2 = axis_values(axis2);
  const std::size_t n1 = out.a1.size(), n2 = out.a2.size();
  out.points.assign(n1 * n2, PhasePoint{});

  parallel_for_index(n1 * n2, policy, [&](std::size_t k) {
    const std::size_t i1 = k / n2, i2 = k % n2;
    PhasePoint& pt = out.points[k];
    try {
      const ModelInputs local = with_param(
          with_param(fixed, axis1.param, out.a1[i1]), axis2.param, out.a2[i2]);
      const CondensateSolution sol = solve_condensate(
          local.engine, local.cold, local.hot, solve_options, ExecPolicy::Serial);
      pt.first_order_hint =
          sol.transition_order_hint == TransitionHint::FirstOrderSuspected;
      const CondensateRoot* root = sol.largest_stable_nonzero();
      const CondensateRoot* reported = root ? root : &sol.roots.front();
      pt.condensed = root != nullptr;
      pt.N_c = root ? root->N_c : 0.0;
      if (reported->report_ok) {
        const SteadyStateReport& rep = reported->report;
        const NetOutput net = net_power_and_efficiency(rep);
        pt.net_power = net.net_power;
        pt.net_efficiency =
            net.net_efficiency.value_or(std::numeric_limits<double>::quiet_NaN());
        pt.inversion = inversion_ratio(rep.rho)
                           .value_or(std::numeric_limits<double>::quiet_NaN());
        pt.residual = rep.first_law_residual;
        pt.min_eig = rep.min_eigenvalue;
        pt.positivity_ok = rep.positivity_ok;
      } else {
        pt.net_efficiency = pt.inversion = pt.residual = pt.min_eig =
            std::numeric_limits<double>::quiet_NaN();
      }
    } catch (const std::exception& e) {
      pt.failed = true;
      pt.error = e.what();
      pt.net_power = pt.net_efficiency = pt.inversion = pt.residual = pt.min_eig =
          std::numeric_limits<double>::quiet_NaN();
    }
  });
  return out;
}

namespace {

// Linear-gain threshold indicator: positive once inversion beats loss.
double threshold_excess(const ModelInputs& in) {
  return static_cast<double>(in.engine.M) *
             linear_gain(in.engine, in.cold, in.hot, 1.0) -
         in.engine.gamma;
}

// Only positivity-respecting steady states count as condensed here: close to
// the occupation-domain edge the equations can produce a spurious gain window
// whose stable crossing grossly violates positivity.
bool has_physical_stable_root(const ModelInputs& in, const CondensateOptions& opts) {
  try {
    const CondensateSolution sol =
        solve_condensate(in.engine, in.cold, in.hot, opts, ExecPolicy::Serial);
    for (const auto& root : sol.roots)
      if (root.N_c > 0.0 && root.stable && root.report_ok &&
          root.report.positivity_ok)
        return true;
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

// Generic bisection of `pred` (false -> true transition somewhere in [lo,hi])
// on the bisect_param axis. Returns the final bracket.
template <typename Pred>
std::pair<double, double> bisect_transition(Pred&& pred, double lo, double hi,
                                            bool pred_lo, const BoundaryOptions& opt) {
  double a = lo, b = hi;
  int iterations = 0;
  while (iterations < opt.max_iterations &&
         (iterations < opt.min_iterations ||
          (b - a) > opt.rel_tol * std::max({std::abs(a), std::abs(b), 1e-300}))) {
    const double mid = 0.5 * (a + b);
    if (pred(mid) == pred_lo) a = mid; else b = mid;
    ++iterations;
  }
  return {a, b};
}

} // namespace

Boundary boundary_scan(const ModelInputs& fixed, SweepParam scan_param,
                       std::span<const double> scan_values, SweepParam bisect_param,
                       double lo, double hi, const BoundaryOptions& options) {
  Boundary out;
  out.scan_param = scan_param;
  out.bisect_param = bisect_param;

  for (double s : scan_values) {
    const ModelInputs at_scan = with_param(fixed, scan_param, s);
    auto excess = [&](double x) {
      return threshold_excess(with_param(at_scan, bisect_param, x));
    };
    double g_lo, g_hi;
    try {
      g_lo = excess(lo);
      g_hi = excess(hi);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << to_string(scan_param) << " = " << s
          << ": threshold evaluation failed: " << e.what();
      out.omitted.push_back(msg.str());
      continue;
    }
    if (g_lo * g_hi > 0.0) {
      std::ostringstream msg;
      msg << to_string(scan_param) << " = " << s
          << ": no sign change of the threshold condition in ["
          << lo << ", " << hi << "] (" << g_lo << ", " << g_hi << ")";
      out.omitted.push_back(msg.str());
      continue;
    }

    const bool lo_subcritical = g_lo < 0.0;
    auto below_threshold = [&](double x) { return excess(x) < 0.0; };
    auto [a, b] = bisect_transition(below_threshold, lo, hi, lo_subcritical, options);

    BoundaryPoint pt;
    pt.scan = s;
    pt.lo = a;
    pt.hi = b;

    if (options.refine_first_order) {
      // Probe clearly on the subcritical side; a nonzero stable root there
      // means the transition is first order and the true boundary lies
      // beyond the linear one.
      const double margin =
          std::max(0.005, 4.0 * options.rel_tol) * std::max(std::abs(pt.value()), 1.0);
      const double probe =
          lo_subcritical ? pt.linear_value() - margin : pt.linear_value() + margin;
      const ModelInputs probe_in = with_param(at_scan, bisect_param, probe);
      if (has_physical_stable_root(probe_in, options.solve)) {
        pt.first_order = true;
        auto condensed = [&](double x) {
          return has_physical_stable_root(with_param(at_scan, bisect_param, x),
                                          options.solve);
        };
        const bool lo_condensed = condensed(lo);
        if (lo_condensed != condensed(hi)) {
          auto [a2, b2] = bisect_transition(condensed, lo, hi, lo_condensed, options);
          pt.root_lo = a2;
          pt.root_hi = b2;
        } else {
          pt.root_lo = pt.lo;
          pt.root_hi = pt.hi;
        }
      }
    }
    out.points.push_back(pt);
  }
  return out;
}

Boundary phase_boundary_T(const ModelInputs& fixed, std::span<const double> tc_values,
                          double th_lo, double th_hi, const BoundaryOptions& options) {
  Boundary b = boundary_scan(fixed, SweepParam::Tc, tc_values, SweepParam::Th,
                             th_lo, th_hi, options);
  b.label = "phase-boundary";
  return b;
}

double reversible_slope(const EngineParams& params, const BathSpec& hot) {
  if (!(params.e2 > 0.0))
    throw std::domain_error("reversible line requires e2 > 0");
  return (params.e3 - hot.mu) / params.e2;
}

Boundary refrigerator_boundary(const ModelInputs& fixed, std::span<const double> tx_values,
                               double tph_lo, double tph_hi, const BoundaryOptions& options) {
  Boundary b = boundary_scan(fixed, SweepParam::Th, tx_values, SweepParam::Tc,
                             tph_lo, tph_hi, options);
  b.label = "refrigerator-boundary";
  return b;
}

} // namespace heng
