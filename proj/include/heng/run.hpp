#pragma once

#include <iosfwd>

#include "heng/config.hpp"
#include "heng/output.hpp"

namespace heng {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 success, 2 config error, 3 numeric failure, 4 partial result
// (some sweep/grid points failed; completed points are still emitted).
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitPartial = 4;

// Dispatches the configured command, writes its data files plus
// run_manifest.json under config.output.directory, and returns the exit code.
int run(const RunConfig& config, ExecPolicy policy, std::ostream& log);

} // namespace heng
