#include "heng/model.hpp"

#include <cmath>
#include <stdexcept>

#include "heng/errors.hpp"

namespace heng {

void EngineParams::validate() const {
  if (!(e3 > e2) || !(e2 > 0.0))
    throw ConfigError("engine levels must satisfy e3 > e2 > e1 = 0");
  if (!(g_c > 0.0)) throw ConfigError("engine.g_c must be positive");
  if (gamma < 0.0) throw ConfigError("engine.gamma must be >= 0");
  if (M < 1) throw ConfigError("engine.M must be >= 1");
  if (!std::isfinite(e2) || !std::isfinite(e3) || !std::isfinite(omega) ||
      !std::isfinite(g_c) || !std::isfinite(gamma))
    throw ConfigError("engine parameters must be finite");
}

std::string to_string(BathKind k) {
  switch (k) {
    case BathKind::LorentzianCold: return "lorentzian";
    case BathKind::StepHot: return "step";
    case BathKind::Flat: return "flat";
  }
  return "?";
}

void BathSpec::validate() const {
  if (!(temperature > 0.0)) throw ConfigError("bath temperature must be > 0 K");
  if (kind == BathKind::LorentzianCold && !(width > 0.0))
    throw ConfigError("lorentzian bath width must be > 0");
  if (alpha < 0.0) throw ConfigError("bath alpha must be >= 0");
  if (!std::isfinite(alpha) || !std::isfinite(center_or_edge) ||
      !std::isfinite(width) || !std::isfinite(temperature) || !std::isfinite(mu))
    throw ConfigError("bath parameters must be finite");
}

void ModelInputs::validate() const {
  engine.validate();
  cold.validate();
  hot.validate();
}

double rabi_from_population(double g_c, double N) {
  if (N < 0.0) throw std::domain_error("condensate occupation N must be >= 0");
  return 2.0 * g_c * std::sqrt(N);
}

DressedFrame dressed_frame(const EngineParams& params, double Omega) {
  if (Omega < 0.0) throw std::domain_error("Rabi coupling Omega must be >= 0");
  const double delta = params.detuning();
  DressedFrame f;
  f.omega = params.omega;
  f.rabi = Omega;
  // Two-argument form: Delta < 0 maps to theta in (pi/2, pi] without branch
  // errors. Delta = Omega = 0 gives theta = 0, lambda = 0.
  f.theta = std::atan2(Omega, delta);
  f.lambda = std::hypot(delta, Omega);
  f.e2_tilde = 0.5 * ((params.e3 - params.omega) + params.e2 - f.lambda);
  f.e3_tilde = f.e2_tilde + f.lambda;
  return f;
}

double spectral_density(const BathSpec& bath, double x) {
  switch (bath.kind) {
    case BathKind::LorentzianCold: {
      const double d = x - bath.center_or_edge;
      return 0.5 * bath.alpha / (d * d + bath.width * bath.width);
    }
    case BathKind::StepHot:
      // Closed edge: J(E0) = alpha.
      return x >= bath.center_or_edge ? bath.alpha : 0.0;
    case BathKind::Flat:
      return bath.alpha;
  }
  return 0.0;
}

double occupation(const BathSpec& bath, double E) {
  const double x = (E - bath.mu) / (kKelvin * bath.temperature);
  if (!(x > 0.0))
    throw std::domain_error("Bose occupation requires E > mu (got E - mu = " +
                            std::to_string(E - bath.mu) + " ps^-1)");
  if (x > 700.0) return 0.0; // exp would overflow; occupation is ~1e-304
  return 1.0 / std::expm1(x);
}

} // namespace heng
