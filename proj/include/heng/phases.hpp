#pragma once

#include <span>
#include <string>
#include <vector>

#include "heng/condensate.hpp"

namespace heng {

// Parameters that sweeps and boundary scans may vary.
enum class SweepParam { Th, Tc, Mu, AlphaC, AlphaH, Gamma, E0, Gc, M };

SweepParam parse_sweep_param(const std::string& name);
std::string to_string(SweepParam p);

ModelInputs with_param(ModelInputs base, SweepParam p, double value);

struct SweepAxis {
  SweepParam param = SweepParam::Th;
  double lo = 0.0, hi = 0.0;
  int count = 2;
  bool log_scale = false;
};

std::vector<double> axis_values(const SweepAxis& axis);

struct PhasePoint {
  bool failed = false;
  std::string error;
  bool condensed = false;
  double N_c = 0.0;
  double net_power = 0.0;
  double net_efficiency = 0.0;
  double inversion = 0.0;
  double residual = 0.0; // first-law residual
  double min_eig = 0.0;
  bool positivity_ok = true;
  bool first_order_hint = false;
};

struct PhaseDiagram {
  SweepAxis axis1, axis2;
  std::vector<double> a1, a2;
  std::vector<PhasePoint> points; // row-major: points[i1 * a2.size() + i2]

  const PhasePoint& at(std::size_t i1, std::size_t i2) const {
    return points[i1 * a2.size() + i2];
  }
};

// Evaluates solve_condensate at every grid point; per-point failures are
// recorded in place and never abort the sweep.
PhaseDiagram sweep(const ModelInputs& fixed, const SweepAxis& axis1,
                   const SweepAxis& axis2, const CondensateOptions& solve_options,
                   ExecPolicy policy = ExecPolicy::Parallel);

struct BoundaryOptions {
  double rel_tol = 1e-4;
  int min_iterations = 12;
  int max_iterations = 200;
  bool refine_first_order = true;
  CondensateOptions solve; // used for first-order probing/refinement
};

struct BoundaryPoint {
  double scan = 0.0;         // scanned-axis value
  double lo = 0.0, hi = 0.0; // linear-threshold bracket on the bisected axis
  bool first_order = false;
  // Root-existence bracket, set when a first-order transition was detected;
  // it then differs from the linear bracket (hysteresis region).
  double root_lo = 0.0, root_hi = 0.0;

  double linear_value() const { return 0.5 * (lo + hi); }
  double value() const {
    return first_order ? 0.5 * (root_lo + root_hi) : linear_value();
  }
};

struct Boundary {
  std::string label;
  SweepParam scan_param = SweepParam::Tc;
  SweepParam bisect_param = SweepParam::Th;
  std::vector<BoundaryPoint> points;
  std::vector<std::string> omitted; // diagnostics for skipped scan values
};

// Bisects `bisect_param` on the linear-threshold condition M R'(0) = gamma at
// each scanned value; when a first-order transition is suspected the point is
// re-bisected on the existence of a nonzero stable root.
Boundary boundary_scan(const ModelInputs& fixed, SweepParam scan_param,
                       std::span<const double> scan_values, SweepParam bisect_param,
                       double lo, double hi, const BoundaryOptions& options);

// Condensation boundary T_h(T_c) in the bath-temperature plane.
Boundary phase_boundary_T(const ModelInputs& fixed, std::span<const double> tc_values,
                          double th_lo, double th_hi, const BoundaryOptions& options);

// Entropy-balance line: T_h = T_c (e3 - mu)/e2, the gamma -> 0 boundary.
double reversible_slope(const EngineParams& params, const BathSpec& hot);

// Dissipator/refrigerator regime (omega < mu): boundary in the phonon
// temperature at each exciton temperature.
Boundary refrigerator_boundary(const ModelInputs& fixed, std::span<const double> tx_values,
                               double tph_lo, double tph_hi, const BoundaryOptions& options);

} // namespace heng
