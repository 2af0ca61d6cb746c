#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "heng/thermo.hpp"
#include "helpers.hpp"

using namespace heng;

namespace {

SteadyStateReport steady_report(const ModelInputs& in, double Omega) {
  const Generator gen = assemble_generator(in.engine, Omega, in.cold, in.hot);
  return currents(steady_state(gen), gen.frame, in.cold, in.hot, in.engine);
}

} // namespace

TEST_CASE("stalled cycle at Omega = 0") {
  const SteadyStateReport rep = steady_report(test::default_inputs(), 0.0);
  CHECK(rep.power_W == 0.0);
  CHECK(std::abs(rep.Qc_dot) < 1e-12);
  CHECK(std::abs(rep.Eh_dot) < 1e-10);
  CHECK(rep.rates.R == 0.0);
  CHECK(std::isfinite(rep.first_law_residual));
}

TEST_CASE("first law holds to a good approximation at a condensed steady state") {
  // Self-consistent occupation on the default preset is near N = 203.
  const ModelInputs in = test::default_inputs();
  const double Omega = rabi_from_population(in.engine.g_c, 203.0);
  const SteadyStateReport rep = steady_report(in, Omega);
  CHECK(rep.first_law_residual < 1e-2);
  CHECK(rep.positivity_ok);
}

TEST_CASE("energy budget reduces to the dressed-rate identity") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 25; ++k) {
    const test::RandomDraw d = test::random_draw(rng);
    const Generator gen =
        assemble_generator(d.in.engine, d.Omega, d.in.cold, d.in.hot);
    const SteadyStateReport rep =
        currents(steady_state(gen), gen.frame, d.in.cold, d.in.hot, d.in.engine);
    const double identity = gen.frame.e2_tilde * (rep.rates.Rc2 + rep.rates.Rh2) +
                            gen.frame.e3_tilde * (rep.rates.Rc3 + rep.rates.Rh3);
    const double total = rep.power_W + rep.Qc_dot + rep.Eh_dot;
    const double scale = std::max({std::abs(rep.power_W), std::abs(rep.Qc_dot),
                                   std::abs(rep.Eh_dot), 1e-3});
    CHECK(std::abs(total - identity) < 1e-10 * scale);
  }
}

TEST_CASE("analytic efficiency") {
  ModelInputs in = test::default_inputs();
  SUBCASE("default preset values") {
    const AnalyticEfficiency eff = efficiency_analytic(in.engine, in.cold, in.hot);
    CHECK(eff.eta == doctest::Approx(8.0 / 13.0).epsilon(1e-12));
    CHECK(eff.eta_carnot == doctest::Approx(0.95).epsilon(1e-12));
  }
  SUBCASE("omega = mu gives zero efficiency") {
    in.engine.omega = in.hot.mu;
    CHECK(efficiency_analytic(in.engine, in.cold, in.hot).eta == 0.0);
  }
  SUBCASE("e3 = mu is rejected") {
    in.hot.mu = in.engine.e3;
    CHECK_THROWS_AS(efficiency_analytic(in.engine, in.cold, in.hot),
                    std::domain_error);
  }
}

TEST_CASE("net power and efficiency in the engine regime") {
  const ModelInputs in = test::default_inputs();
  const double Omega = rabi_from_population(in.engine.g_c, 203.0);
  const SteadyStateReport rep = steady_report(in, Omega);
  const NetOutput net = net_power_and_efficiency(rep);

  // omega > mu, condensed: positive cycle and positive heat draw.
  CHECK(rep.rates.R > 0.0);
  CHECK(rep.power_W > 0.0);
  CHECK(rep.Qh_dot > 0.0);
  CHECK(net.net_power > 0.0);
  CHECK(net.net_power ==
        doctest::Approx((in.engine.omega - in.hot.mu) * rep.rates.R).epsilon(1e-12));
  REQUIRE(net.net_efficiency.has_value());
  CHECK(*net.net_efficiency > 0.0);
  // Energy shifts are small here, so the analytic Delta = 0 form is close.
  CHECK(*net.net_efficiency ==
        doctest::Approx(8.0 / 13.0).epsilon(5e-3));
  CHECK(*net.net_efficiency <
        efficiency_analytic(in.engine, in.cold, in.hot).eta_carnot);
}

TEST_CASE("dissipator regime has negative net power") {
  ModelInputs in = test::fig8_inputs();
  const double Omega = rabi_from_population(in.engine.g_c, 100.0);
  const SteadyStateReport rep = steady_report(in, Omega);
  const NetOutput net = net_power_and_efficiency(rep);
  CHECK(rep.rates.R > 0.0); // still condensing
  CHECK(net.net_power < 0.0);
}

TEST_CASE("inversion ratio") {
  const ModelInputs in = test::default_inputs();
  SUBCASE("equilibrium populations reproduce the generalized Boltzmann factor") {
    const SteadyStateReport rep = steady_report(in, 0.0);
    const auto ratio = inversion_ratio(rep.rho);
    REQUIRE(ratio.has_value());
    const double beta_h = 1.0 / (kKelvin * in.hot.temperature);
    const double beta_c = 1.0 / (kKelvin * in.cold.temperature);
    const double expected =
        std::exp(-beta_h * (in.engine.e3 - in.hot.mu)) * std::exp(beta_c * in.engine.e2);
    CHECK(*ratio == doctest::Approx(expected).epsilon(1e-10));
    CHECK(*ratio > 1.0);
  }
  SUBCASE("equal temperatures, zero mu: no inversion") {
    ModelInputs eq = in;
    eq.hot.temperature = eq.cold.temperature;
    eq.hot.mu = 0.0;
    const SteadyStateReport rep = steady_report(eq, 0.0);
    const auto ratio = inversion_ratio(rep.rho);
    REQUIRE(ratio.has_value());
    CHECK(*ratio < 1.0);
  }
  SUBCASE("vanishing rho22 reports absent") {
    Matrix3c m = Matrix3c::Zero();
    m(0, 0) = 1.0;
    CHECK(!inversion_ratio(DensityMatrix3{m, Basis::Rotating}).has_value());
  }
  SUBCASE("ratio is one on the reversible line") {
    ModelInputs rev = in;
    rev.hot.temperature = 26.0; // e2/T_c = (e3 - mu)/T_h at T_c = 10 K
    const SteadyStateReport rep = steady_report(rev, 0.0);
    const auto ratio = inversion_ratio(rep.rho);
    REQUIRE(ratio.has_value());
    CHECK(*ratio == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("current orientation labels") {
  CHECK(std::string(current_orientation(1.0)) == "into-bath");
  CHECK(std::string(current_orientation(-1.0)) == "out-of-bath");
  CHECK(std::string(current_orientation(0.0)) == "zero");
}
