#pragma once

#include <string>
#include <vector>

#include "heng/parallel.hpp"
#include "heng/thermo.hpp"

namespace heng {

// Cycle rate R = Omega Im(rho_32) at the self-consistent Omega(N), with the
// full steady-state report.
struct GainResult {
  double R = 0.0;
  SteadyStateReport report;
};

GainResult gain_at(const EngineParams& params, const BathSpec& cold,
                   const BathSpec& hot, double N);

// Fermi-golden-rule gain 4 g_c^2 N (rho33 - rho22)/(gamma_c_down +
// gamma_h_down) with Omega = 0 populations and rates.
double linear_gain(const EngineParams& params, const BathSpec& cold,
                   const BathSpec& hot, double N);

// Largest N for which all sampled energies stay inside the occupation
// domains (lower dressed energy positive for the cold bath; lower hot
// sampling energy above mu where the hot spectral density is nonzero).
// Returns +inf when nothing binds.
double domain_N_max(const EngineParams& params, const BathSpec& cold,
                    const BathSpec& hot);

struct Discontinuity {
  std::size_t index = 0; // jump between grid points index-1 and index
  double N_lo = 0.0, N_hi = 0.0;
  double R_lo = 0.0, R_hi = 0.0;
  bool rising = true;
};

struct GainGridOptions {
  double n_max = 1e7;
  int points = 400;
  bool linear_grid = false; // plotting grids; the solver uses the hybrid grid
};

struct GainCurve {
  ModelInputs inputs; // snapshot of what produced the curve
  std::vector<double> N;
  std::vector<double> R;
  std::vector<SteadyStateReport> reports;
  std::vector<char> report_ok;
  std::vector<std::size_t> failed;
  std::vector<std::string> errors;
  std::vector<Discontinuity> discontinuities;
  double n_max_requested = 0.0;
  double n_max_used = 0.0;
  bool domain_clipped = false;
};

GainCurve build_gain_curve(const EngineParams& params, const BathSpec& cold,
                           const BathSpec& hot, const GainGridOptions& options,
                           ExecPolicy policy = ExecPolicy::Parallel);

struct CondensateRoot {
  double N_c = 0.0;
  bool stable = false;
  bool at_discontinuity = false; // sign change across a gain jump, not a zero
  double residual = 0.0;         // |M R(N_c) - gamma N_c|
  SteadyStateReport report;
  bool report_ok = false;
};

enum class TransitionHint { Continuous, FirstOrderSuspected };

struct CondensateSolution {
  std::vector<CondensateRoot> roots; // ascending, N = 0 always present
  bool threshold_exceeded = false;   // M R'(0) > gamma
  TransitionHint transition_order_hint = TransitionHint::Continuous;
  double linear_slope = 0.0; // finite-difference R'(0)
  GainCurve curve;

  const CondensateRoot* largest_stable_nonzero() const;
};

struct CondensateOptions {
  double n_max = 1e7;
  int grid_points = 400;
};

CondensateSolution solve_condensate(const EngineParams& params, const BathSpec& cold,
                                    const BathSpec& hot, const CondensateOptions& options,
                                    ExecPolicy policy = ExecPolicy::Parallel);

struct ThresholdInfo {
  double critical_inversion = 0.0; // gamma (gc_down + gh_down)/(4 g_c^2 M)
  double actual_inversion = 0.0;   // Omega = 0 rho33 - rho22
  bool exceeded = false;
};
ThresholdInfo threshold_inversion(const EngineParams& params, const BathSpec& cold,
                                  const BathSpec& hot);

} // namespace heng
