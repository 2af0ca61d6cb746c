#include "heng/condensate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "heng/errors.hpp"

namespace heng {

namespace {

// Hybrid root-search grid: a short linear prefix resolving N -> 0, then
// geometric spacing since the dressed-state shifts scale like sqrt(N) and the
// features span decades.
std::vector<double> solver_grid(double n_max, int points) {
  points = std::max(points, 24);
  std::vector<double> grid;
  grid.reserve(points);
  const double n_lin = std::min(1e-3, n_max);
  const int lin_points = 9;
  for (int i = 0; i < lin_points; ++i)
    grid.push_back(n_lin * static_cast<double>(i) / (lin_points - 1));
  if (n_max > n_lin) {
    const int geo_points = points - lin_points;
    const double ratio = std::log(n_max / n_lin);
    for (int i = 1; i <= geo_points; ++i)
      grid.push_back(n_lin * std::exp(ratio * static_cast<double>(i) / geo_points));
  }
  grid.back() = n_max;
  return grid;
}

std::vector<double> linear_grid(double n_max, int points) {
  points = std::max(points, 2);
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = n_max * static_cast<double>(i) / (points - 1);
  return grid;
}

void detect_discontinuities(GainCurve& curve) {
  const std::size_t n = curve.N.size();
  double r_scale = 0.0;
  for (double r : curve.R)
    if (std::isfinite(r)) r_scale = std::max(r_scale, std::abs(r));
  if (r_scale == 0.0) return;
  for (std::size_t i = 2; i < n; ++i) {
    const double r0 = curve.R[i - 2], r1 = curve.R[i - 1], r2 = curve.R[i];
    if (!std::isfinite(r0) || !std::isfinite(r1) || !std::isfinite(r2)) continue;
    const double h_prev = curve.N[i - 1] - curve.N[i - 2];
    const double h = curve.N[i] - curve.N[i - 1];
    if (h_prev <= 0.0 || h <= 0.0) continue;
    const double predicted = std::abs((r1 - r0) / h_prev * h);
    const double jump = std::abs(r2 - r1);
    if (jump > 10.0 * predicted && jump > 1e-6 * r_scale) {
      Discontinuity d;
      d.index = i;
      d.N_lo = curve.N[i - 1];
      d.N_hi = curve.N[i];
      d.R_lo = r1;
      d.R_hi = r2;
      d.rising = r2 > r1;
      curve.discontinuities.push_back(d);
    }
  }
}

} // namespace

GainResult gain_at(const EngineParams& params, const BathSpec& cold,
                   const BathSpec& hot, double N) {
  const double omega_rabi = rabi_from_population(params.g_c, N);
  const Generator gen = assemble_generator(params, omega_rabi, cold, hot);
  const DensityMatrix3 rho = steady_state(gen);
  GainResult out;
  out.report = currents(rho, gen.frame, cold, hot, params);
  out.R = out.report.rates.R;
  return out;
}

double linear_gain(const EngineParams& params, const BathSpec& cold,
                   const BathSpec& hot, double N) {
  if (N < 0.0) throw std::domain_error("linear_gain: N must be >= 0");
  const LambRates lr = lamb_limit(params, cold, hot);
  const LambPopulations p = lamb_populations(params, cold, hot);
  const double linewidth = lr.gamma_c_down + lr.gamma_h_down;
  if (linewidth <= 0.0) return 0.0;
  return 4.0 * params.g_c * params.g_c * N * (p.rho33 - p.rho22) / linewidth;
}

double domain_N_max(const EngineParams& params, const BathSpec& cold,
                    const BathSpec& hot) {
  const double delta = params.detuning();
  double lambda_max = std::numeric_limits<double>::infinity();

  // Cold occupation at the lower dressed energy: e~2 > 0. A step-shaped cold
  // bath would lift this where J vanishes; the supported cold shapes
  // (Lorentzian, flat) are nonzero everywhere.
  (void)cold;
  lambda_max = std::min(lambda_max, 2.0 * params.e2 + delta);

  // Hot occupation at the lower sampling energy e~2 + omega > mu. For a step
  // bath with mu below the edge the spectral density shuts off first.
  const bool hot_binds =
      hot.kind != BathKind::StepHot || hot.mu >= hot.center_or_edge;
  if (hot_binds)
    lambda_max = std::min(lambda_max, 2.0 * (params.e3 - hot.mu) - delta);

  if (!std::isfinite(lambda_max)) return std::numeric_limits<double>::infinity();
  if (lambda_max <= std::abs(delta)) return 0.0;
  return (lambda_max * lambda_max - delta * delta) /
         (4.0 * params.g_c * params.g_c);
}

GainCurve build_gain_curve(const EngineParams& params, const BathSpec& cold,
                           const BathSpec& hot, const GainGridOptions& options,
                           ExecPolicy policy) {
  GainCurve curve;
  curve.inputs = ModelInputs{params, cold, hot};
  curve.n_max_requested = options.n_max;
  const double n_dom = domain_N_max(params, cold, hot);
  curve.n_max_used = std::min(options.n_max, 0.999 * n_dom);
  curve.domain_clipped = curve.n_max_used < options.n_max;
  if (!(curve.n_max_used > 0.0))
    throw NumericError("gain curve: no evaluable N range (occupation domain "
                       "is empty at N = 0)");

  curve.N = options.linear_grid ? linear_grid(curve.n_max_used, options.points)
                                : solver_grid(curve.n_max_used, options.points);
  const std::size_t n = curve.N.size();
  curve.R.assign(n, std::numeric_limits<double>::quiet_NaN());
  curve.reports.assign(n, SteadyStateReport{});
  curve.report_ok.assign(n, 0);
  std::vector<std::string> point_error(n);

  parallel_for_index(n, policy, [&](std::size_t i) {
    if (curve.N[i] == 0.0) {
      // Omega = 0 implies vanishing coherence, hence R = 0, even when the
      // undriven steady state itself is degenerate.
      curve.R[i] = 0.0;
      try {
        curve.reports[i] = gain_at(params, cold, hot, 0.0).report;
        curve.report_ok[i] = 1;
      } catch (const std::exception&) {
      }
      return;
    }
    try {
      GainResult g = gain_at(params, cold, hot, curve.N[i]);
      curve.R[i] = g.R;
      curve.reports[i] = std::move(g.report);
      curve.report_ok[i] = 1;
    } catch (const std::exception& e) {
      point_error[i] = e.what();
    }
  });

  for (std::size_t i = 0; i < n; ++i) {
    if (!point_error[i].empty()) {
      curve.failed.push_back(i);
      curve.errors.push_back(point_error[i]);
    }
  }
  detect_discontinuities(curve);
  return curve;
}

const CondensateRoot* CondensateSolution::largest_stable_nonzero() const {
  const CondensateRoot* best = nullptr;
  for (const auto& r : roots)
    if (r.stable && r.N_c > 0.0) best = &r;
  return best;
}

CondensateSolution solve_condensate(const EngineParams& params, const BathSpec& cold,
                                    const BathSpec& hot, const CondensateOptions& options,
                                    ExecPolicy policy) {
  const double gamma = params.gamma;
  const double m_count = static_cast<double>(params.M);

  CondensateSolution sol;
  GainGridOptions grid_opts;
  grid_opts.n_max = options.n_max;
  grid_opts.points = options.grid_points;
  sol.curve = build_gain_curve(params, cold, hot, grid_opts, policy);

  if (!sol.curve.failed.empty()) {
    std::ostringstream msg;
    msg << "gain evaluation failed at N = " << sol.curve.N[sol.curve.failed.front()]
        << ": " << sol.curve.errors.front();
    throw NumericError(msg.str());
  }

  const auto& N = sol.curve.N;
  const auto& R = sol.curve.R;
  const std::size_t n = N.size();

  auto f_of = [&](double nn) { return m_count * gain_at(params, cold, hot, nn).R - gamma * nn; };
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = m_count * R[i] - gamma * N[i];

  if (f.back() > 0.0) {
    std::ostringstream msg;
    msg << "bracket does not close: M R(N) - gamma N = " << f.back()
        << " at N = " << N.back()
        << (sol.curve.domain_clipped ? " (grid clipped to the occupation domain)" : "");
    throw BracketError(msg.str());
  }

  // R'(0) by finite difference on the first nonzero grid point.
  std::size_t i1 = 1;
  while (i1 < n && N[i1] == 0.0) ++i1;
  sol.linear_slope = i1 < n ? R[i1] / N[i1] : 0.0;
  sol.threshold_exceeded = m_count * sol.linear_slope > gamma;

  CondensateRoot zero_root;
  zero_root.N_c = 0.0;
  zero_root.stable = !sol.threshold_exceeded;
  zero_root.residual = 0.0;
  if (sol.curve.report_ok[0]) {
    zero_root.report = sol.curve.reports[0];
    zero_root.report_ok = true;
  }
  sol.roots.push_back(zero_root);

  const double f_scale = std::max(gamma, 1e-300);
  for (std::size_t i = i1; i + 1 < n; ++i) {
    if (!(f[i] * f[i + 1] < 0.0)) continue;
    double a = N[i], b = N[i + 1];
    double fa = f[i], fb = f[i + 1];
    for (int it = 0; it < 200 && (b - a) > 1e-11 * std::max(1.0, b); ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = f_of(mid);
      if (fm == 0.0) { a = b = mid; fa = fb = 0.0; break; }
      if ((fm < 0.0) == (fa < 0.0)) { a = mid; fa = fm; }
      else { b = mid; fb = fm; }
    }
    CondensateRoot root;
    root.N_c = 0.5 * (a + b);
    const double f_root = f_of(root.N_c);
    root.residual = std::abs(f_root);
    root.at_discontinuity =
        root.residual > 1e-7 * std::max(gamma * root.N_c, f_scale);
    if (root.at_discontinuity) {
      // Secant slope across the jump decides the flow direction.
      root.stable = (fb - fa) < 0.0;
    } else {
      const double h = 1e-5 * std::max(root.N_c, 1.0);
      const double fp = (f_of(root.N_c + h) - f_of(std::max(root.N_c - h, 0.0))) /
                        (root.N_c + h - std::max(root.N_c - h, 0.0));
      root.stable = fp < 0.0;
    }
    GainResult g = gain_at(params, cold, hot, root.N_c);
    root.report = std::move(g.report);
    root.report_ok = true;
    sol.roots.push_back(root);
  }

  const bool stable_nonzero = sol.largest_stable_nonzero() != nullptr;
  // Only jumps that interact with the gain-loss balance matter for the
  // transition order; steep variation near the occupation-domain edge, deep
  // in the f < 0 region, does not.
  bool relevant_jump = false;
  for (const auto& d : sol.curve.discontinuities)
    if (d.index < n && std::max(f[d.index - 1], f[d.index]) > 0.0)
      relevant_jump = true;
  bool convex_onset = false;
  {
    // Slope growing well beyond its small-N value before the curve peaks
    // signals a first-order (concave-onset) gain shape.
    std::size_t peak = i1;
    for (std::size_t i = i1; i < n; ++i)
      if (R[i] > R[peak]) peak = i;
    double s0 = sol.linear_slope;
    if (s0 > 0.0) {
      for (std::size_t i = i1; i + 1 <= peak; ++i) {
        const double s = (R[i + 1] - R[i]) / (N[i + 1] - N[i]);
        if (s > 2.0 * s0) { convex_onset = true; break; }
      }
    }
  }
  if ((stable_nonzero && !sol.threshold_exceeded) || relevant_jump || convex_onset)
    sol.transition_order_hint = TransitionHint::FirstOrderSuspected;

  return sol;
}

ThresholdInfo threshold_inversion(const EngineParams& params, const BathSpec& cold,
                                  const BathSpec& hot) {
  const LambRates lr = lamb_limit(params, cold, hot);
  const LambPopulations p = lamb_populations(params, cold, hot);
  ThresholdInfo out;
  out.critical_inversion = params.gamma * (lr.gamma_c_down + lr.gamma_h_down) /
                           (4.0 * params.g_c * params.g_c *
                            static_cast<double>(params.M));
  out.actual_inversion = p.rho33 - p.rho22;
  out.exceeded = out.actual_inversion > out.critical_inversion;
  return out;
}

} // namespace heng
