#pragma once

#include <optional>

#include "heng/liouville.hpp"

namespace heng {

// Steady-state energy bookkeeping at fixed Omega. Sign conventions: power_W,
// Qc_dot and Eh_dot are the literal currents of the model (Eh_dot is the
// current *to* the hot bath and is negative while the engine runs); Qh_dot is
// the heat drawn *from* the hot bath, positive in the heat-engine regime.
struct SteadyStateReport {
  DensityMatrix3 rho; // rotating basis
  BathRates rates;
  double power_W = 0.0;       // omega * Omega * Im(rho_32)
  double Qc_dot = 0.0;        // e~3 Rc3 + e~2 Rc2
  double Eh_dot = 0.0;        // (e~3+w) Rh3 + (e~2+w) Rh2
  double Qh_dot = 0.0;        // -(Eh_dot + mu R)
  double work_in_dot = 0.0;   // mu * R
  double first_law_residual = 0.0; // |W + Qc + Eh| / max(|W|,|Qc|,|Eh|,eps)
  double min_eigenvalue = 0.0;
  bool positivity_ok = true; // min eigenvalue >= -1e-8
};

SteadyStateReport currents(const DensityMatrix3& rho, const DressedFrame& frame,
                           const BathSpec& cold, const BathSpec& hot,
                           const EngineParams& params);

// eta = (omega - mu)/(e3 - mu) at Delta = 0, and the Carnot bound 1 - Tc/Th.
struct AnalyticEfficiency {
  double eta = 0.0;
  double eta_carnot = 0.0;
};
AnalyticEfficiency efficiency_analytic(const EngineParams& params,
                                       const BathSpec& cold, const BathSpec& hot);

// net_power = power_W - work_in = (omega - mu) R; net_efficiency =
// net_power / Qh_dot, absent when Qh_dot vanishes.
struct NetOutput {
  double net_power = 0.0;
  std::optional<double> net_efficiency;
};
NetOutput net_power_and_efficiency(const SteadyStateReport& report);

// rho_33/rho_22; absent when rho_22 = 0.
std::optional<double> inversion_ratio(const DensityMatrix3& rho);

// Human-readable orientation of a bath current given its sign.
const char* current_orientation(double current);

} // namespace heng
