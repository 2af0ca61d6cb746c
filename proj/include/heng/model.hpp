#pragma once

#include <string>

#include "heng/units.hpp"

namespace heng {

// Three-level working medium plus the classical condensate mode it drives.
// All energies/rates in ps^-1 (e1 = 0 fixes the zero of energy).
struct EngineParams {
  double e2 = 0.0;    // middle level
  double e3 = 0.0;    // top level
  double omega = 0.0; // condensate frequency
  double g_c = 0.0;   // condensate coupling
  double gamma = 0.0; // condensate loss rate
  long M = 1;         // number of working-medium replicas

  double detuning() const { return (e3 - e2) - omega; }
  void validate() const; // throws ConfigError on violated invariants
};

enum class BathKind { LorentzianCold, StepHot, Flat };

std::string to_string(BathKind k);

// One reservoir: spectral density shape plus thermal occupation parameters.
struct BathSpec {
  BathKind kind = BathKind::LorentzianCold;
  double alpha = 0.0;          // prefactor, ps^-1
  double center_or_edge = 0.0; // Lorentzian center / step edge, ps^-1
  double width = 0.0;          // Lorentzian width, ps^-1
  double temperature = 0.0;    // K
  double mu = 0.0;             // chemical potential, ps^-1 (0 for cold)

  void validate() const;
  // The step-edge preset for the dissipator/refrigerator regime places mu
  // above the edge; the sampled energies stay above mu, so this is reported
  // as a warning rather than rejected.
  bool mu_above_edge() const {
    return kind == BathKind::StepHot && mu >= center_or_edge;
  }
};

// Eigenframe of the rotated Hamiltonian: mixing angle, splitting, and the
// quasi-energies at which both baths are sampled.
struct DressedFrame {
  double theta = 0.0;    // mixing angle, atan2(Omega, Delta)
  double lambda = 0.0;   // splitting sqrt(Delta^2 + Omega^2)
  double e2_tilde = 0.0; // lower dressed energy
  double e3_tilde = 0.0; // upper dressed energy
  double omega = 0.0;    // condensate frequency
  double rabi = 0.0;     // Omega
};

// Full immutable snapshot of one model configuration.
struct ModelInputs {
  EngineParams engine;
  BathSpec cold;
  BathSpec hot;
  void validate() const;
};

// Omega = 2 g_c sqrt(N). Throws std::domain_error for N < 0.
double rabi_from_population(double g_c, double N);

DressedFrame dressed_frame(const EngineParams& params, double Omega);

double spectral_density(const BathSpec& bath, double x);

// Bose occupation 1/(exp((E-mu)/kB T) - 1). Throws std::domain_error when
// E <= mu (divergent/negative occupation).
double occupation(const BathSpec& bath, double E);

} // namespace heng
