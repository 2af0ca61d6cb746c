#pragma once

#include <cstddef>

namespace heng {

// Grid evaluations are pure functions of immutable inputs; results are
// written by index, so parallel and serial execution produce identical
// output. The serial path is kept as the reference for testing and for the
// benchmark comparison.
enum class ExecPolicy { Serial, Parallel };

// `body(i)` must not throw: catch inside and record failures by index.
template <typename F>
void parallel_for_index(std::size_t n, ExecPolicy policy, F&& body) {
#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace heng
