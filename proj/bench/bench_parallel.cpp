// Compares the OpenMP grid kernels against the serial reference: same
// results by construction, wall time reported for both.

#include <cmath>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "heng/config.hpp"
#include "heng/phases.hpp"

using namespace heng;

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

int threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

struct Timing {
  double serial = 0.0;
  double parallel = 0.0;
  double max_diff = 0.0;
};

void print_row(const char* name, const Timing& t) {
  std::printf("%-28s %10.3f s %10.3f s %8.2fx %12.3g\n", name, t.serial,
              t.parallel, t.serial / t.parallel, t.max_diff);
}

Timing bench_gain_curve(const ModelInputs& in, int points) {
  GainGridOptions opts;
  opts.n_max = 2e4;
  opts.points = points;
  Timing t;
  double t0 = now();
  const GainCurve a = build_gain_curve(in.engine, in.cold, in.hot, opts,
                                       ExecPolicy::Serial);
  t.serial = now() - t0;
  t0 = now();
  const GainCurve b = build_gain_curve(in.engine, in.cold, in.hot, opts,
                                       ExecPolicy::Parallel);
  t.parallel = now() - t0;
  for (std::size_t i = 0; i < a.R.size(); ++i)
    t.max_diff = std::max(t.max_diff, std::abs(a.R[i] - b.R[i]));
  return t;
}

Timing bench_sweep(const ModelInputs& in, int n1, int n2) {
  const SweepAxis th{SweepParam::Th, 40.0, 400.0, n1, false};
  const SweepAxis tc{SweepParam::Tc, 4.0, 40.0, n2, false};
  const CondensateOptions copts{2e4, 160};
  Timing t;
  double t0 = now();
  const PhaseDiagram a = sweep(in, th, tc, copts, ExecPolicy::Serial);
  t.serial = now() - t0;
  t0 = now();
  const PhaseDiagram b = sweep(in, th, tc, copts, ExecPolicy::Parallel);
  t.parallel = now() - t0;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    t.max_diff = std::max(t.max_diff, std::abs(a.points[i].N_c - b.points[i].N_c));
  return t;
}

} // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::stoi(argv[1]) : 1;
  const ModelInputs in = default_preset().model;
  std::printf("threads: %d, scale: %d\n", threads(), scale);
  std::printf("%-28s %12s %12s %9s %12s\n", "kernel", "serial", "openmp",
              "speedup", "max |diff|");
  print_row("gain curve", bench_gain_curve(in, 400 * scale));
  print_row("phase-diagram sweep", bench_sweep(in, 16 * scale, 12 * scale));
  return 0;
}
