#include "heng/thermo.hpp"

#include <cmath>
#include <limits>

#include "heng/errors.hpp"

namespace heng {

SteadyStateReport currents(const DensityMatrix3& rho, const DressedFrame& frame,
                           const BathSpec& cold, const BathSpec& hot,
                           const EngineParams& params) {
  SteadyStateReport rep;
  rep.rho = rho;
  rep.rates = rates_rotating(rho, frame, cold, hot);
  const BathRates& r = rep.rates;

  rep.power_W = frame.omega * r.R;
  rep.Qc_dot = frame.e3_tilde * r.Rc3 + frame.e2_tilde * r.Rc2;
  rep.Eh_dot = (frame.e3_tilde + frame.omega) * r.Rh3 +
               (frame.e2_tilde + frame.omega) * r.Rh2;
  rep.work_in_dot = hot.mu * r.R;
  rep.Qh_dot = -(rep.Eh_dot + rep.work_in_dot);

  const double scale =
      std::max({std::abs(rep.power_W), std::abs(rep.Qc_dot), std::abs(rep.Eh_dot),
                std::numeric_limits<double>::min()});
  rep.first_law_residual = std::abs(rep.power_W + rep.Qc_dot + rep.Eh_dot) / scale;

  rep.min_eigenvalue = rho.min_eigenvalue();
  rep.positivity_ok = rep.min_eigenvalue >= -1e-8;
  (void)params;
  return rep;
}

AnalyticEfficiency efficiency_analytic(const EngineParams& params,
                                       const BathSpec& cold, const BathSpec& hot) {
  if (params.e3 == hot.mu)
    throw std::domain_error("efficiency_analytic: e3 = mu gives vanishing heat input");
  AnalyticEfficiency out;
  out.eta = (params.omega - hot.mu) / (params.e3 - hot.mu);
  out.eta_carnot = 1.0 - cold.temperature / hot.temperature;
  return out;
}

NetOutput net_power_and_efficiency(const SteadyStateReport& report) {
  NetOutput out;
  out.net_power = report.power_W - report.work_in_dot;
  if (report.Qh_dot != 0.0) out.net_efficiency = out.net_power / report.Qh_dot;
  return out;
}

std::optional<double> inversion_ratio(const DensityMatrix3& rho) {
  const double p22 = rho.m(1, 1).real();
  if (p22 == 0.0) return std::nullopt;
  return rho.m(2, 2).real() / p22;
}

const char* current_orientation(double current) {
  if (current > 0.0) return "into-bath";
  if (current < 0.0) return "out-of-bath";
  return "zero";
}

} // namespace heng
