#pragma once

#include <complex>
#include <random>

#include "heng/config.hpp"
#include "heng/liouville.hpp"

namespace heng::test {

inline ModelInputs default_inputs() { return default_preset().model; }

// Detuned pair resonance with a shifted step edge and slow loss, so the loss
// line intersects the post-jump gain branch. e0_minus_mu_mev sets the pump
// degeneracy: n(E0) < 1 puts the band-exit case in the pump-limited regime
// where losing the channel drops the gain.
inline ModelInputs fig6_inputs(double delta_mev, double e0_minus_e3_mev,
                               double e0_minus_mu_mev = 8.0) {
  ModelInputs in = default_inputs();
  in.engine.omega = in.engine.e3 - in.engine.e2 - delta_mev * kMeV;
  in.hot.center_or_edge = in.engine.e3 + e0_minus_e3_mev * kMeV;
  in.hot.mu = in.hot.center_or_edge - e0_minus_mu_mev * kMeV;
  in.engine.gamma = 0.1;
  return in;
}

// Dissipator/refrigerator regime: mu - omega = 2 meV, mu = 1.002 eV.
inline ModelInputs fig8_inputs() {
  ModelInputs in = default_inputs();
  in.engine.omega = 1000.0 * kMeV;
  in.hot.mu = 1002.0 * kMeV;
  return in;
}

inline Matrix3c random_hermitian_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix3c a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = std::complex<double>(u(rng), u(rng));
  Matrix3c h = 0.5 * (a + a.adjoint().eval());
  h += 3.0 * Matrix3c::Identity(); // keep the trace away from zero
  h /= h.trace().real();
  return h;
}

// Parameter draws inside the regime where the Born-Markov description is
// well-behaved: hot band containing e3, moderate drive, no sampled energy
// close to an occupation singularity.
struct RandomDraw {
  ModelInputs in;
  double Omega;
};

inline RandomDraw random_draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RandomDraw d;
  d.in = default_inputs();
  EngineParams& p = d.in.engine;
  p.e2 = (4.0 + 6.0 * u(rng)) * kMeV;
  const double delta = (-1.0 + 2.0 * u(rng)) * kMeV;
  p.omega = (990.0 + 20.0 * u(rng)) * kMeV;
  p.e3 = p.e2 + p.omega + delta;
  p.g_c = 0.02 + 0.08 * u(rng);

  d.in.cold.alpha = 0.05 + 0.15 * u(rng);
  d.in.cold.center_or_edge = p.e2;
  d.in.cold.width = 1.0 + 1.0 * u(rng);
  d.in.cold.temperature = 4.0 + 56.0 * u(rng);

  d.in.hot.alpha = 0.1 + 0.2 * u(rng);
  d.in.hot.center_or_edge = p.e3 - (0.5 + 9.5 * u(rng)) * kMeV;
  d.in.hot.mu = d.in.hot.center_or_edge - (2.0 + 18.0 * u(rng)) * kMeV;
  d.in.hot.temperature = 50.0 + 350.0 * u(rng);

  d.Omega = 0.2 + 3.8 * u(rng);
  return d;
}

} // namespace heng::test
