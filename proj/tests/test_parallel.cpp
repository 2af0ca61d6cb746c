#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heng/condensate.hpp"
#include <cmath>

#include "heng/phases.hpp"
#include "helpers.hpp"

using namespace heng;

// The OpenMP paths must reproduce the serial reference bit for bit: every
// grid point is an independent pure function written by index.

TEST_CASE("gain curve: parallel equals serial bitwise") {
  const ModelInputs in = test::default_inputs();
  GainGridOptions opts;
  opts.n_max = 2000.0;
  opts.points = 80;
  const GainCurve a = build_gain_curve(in.engine, in.cold, in.hot, opts,
                                       ExecPolicy::Serial);
  const GainCurve b = build_gain_curve(in.engine, in.cold, in.hot, opts,
                                       ExecPolicy::Parallel);
  REQUIRE(a.N.size() == b.N.size());
  for (std::size_t i = 0; i < a.N.size(); ++i) {
    CHECK(a.N[i] == b.N[i]);
    CHECK(a.R[i] == b.R[i]); // bitwise
    CHECK(a.reports[i].first_law_residual == b.reports[i].first_law_residual);
  }
  CHECK(a.discontinuities.size() == b.discontinuities.size());
}

TEST_CASE("solver roots: parallel equals serial bitwise") {
  const ModelInputs in = test::default_inputs();
  const CondensateSolution a =
      solve_condensate(in.engine, in.cold, in.hot, {1e6, 120}, ExecPolicy::Serial);
  const CondensateSolution b =
      solve_condensate(in.engine, in.cold, in.hot, {1e6, 120}, ExecPolicy::Parallel);
  REQUIRE(a.roots.size() == b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    CHECK(a.roots[i].N_c == b.roots[i].N_c);
    CHECK(a.roots[i].stable == b.roots[i].stable);
  }
}

TEST_CASE("sweep grid: parallel equals serial bitwise") {
  const ModelInputs in = test::default_inputs();
  const SweepAxis th{SweepParam::Th, 30.0, 250.0, 6, false};
  const SweepAxis al{SweepParam::AlphaC, 0.05, 0.2, 4, false};
  const PhaseDiagram a = sweep(in, th, al, {1e6, 120}, ExecPolicy::Serial);
  const PhaseDiagram b = sweep(in, th, al, {1e6, 120}, ExecPolicy::Parallel);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].condensed == b.points[i].condensed);
    CHECK(a.points[i].N_c == b.points[i].N_c);
    CHECK(a.points[i].net_power == b.points[i].net_power);
    CHECK(a.points[i].residual == b.points[i].residual);
    CHECK(a.points[i].failed == b.points[i].failed);
  }
}

TEST_CASE("repeated sweeps are identical") {
  const ModelInputs in = test::default_inputs();
  const SweepAxis th{SweepParam::Th, 30.0, 250.0, 5, false};
  const SweepAxis tc{SweepParam::Tc, 6.0, 14.0, 3, false};
  const PhaseDiagram a = sweep(in, th, tc, {1e6, 120}, ExecPolicy::Parallel);
  const PhaseDiagram b = sweep(in, th, tc, {1e6, 120}, ExecPolicy::Parallel);
  auto same = [](double x, double y) {
    return x == y || (std::isnan(x) && std::isnan(y));
  };
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].N_c == b.points[i].N_c);
    CHECK(same(a.points[i].net_efficiency, b.points[i].net_efficiency));
  }
}
