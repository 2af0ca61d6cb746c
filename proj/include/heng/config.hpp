#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "heng/phases.hpp"

namespace heng {

enum class Command {
  SteadyState,
  GainCurve,
  SolveCondensate,
  PhaseDiagram,
  PowerMap,
  EfficiencyMap,
  RefrigeratorDiagram,
};

Command parse_command(const std::string& name);
std::string to_string(Command c);

enum class OutputFormat { Csv, Json };

struct OutputOptions {
  std::string directory = "out";
  OutputFormat format = OutputFormat::Csv;
  int precision = 9; // significant digits
};

struct SteadyStateOptions {
  double N = 0.0;               // condensate occupation
  std::optional<double> Omega;  // overrides N when given
};

struct PhaseDiagramOptions {
  double tc_lo = 4.0, tc_hi = 40.0; // K
  int tc_count = 19;
  double th_lo = 5.0, th_hi = 400.0; // bisection bracket, K
  std::vector<double> gammas = {1.0, 0.1, 0.01}; // ps^-1
  double rel_tol = 1e-4;
};

struct RefrigeratorOptions {
  double tx_lo = 2.0, tx_hi = 60.0; // exciton temperature scan, K
  int tx_count = 16;
  double tph_lo = 1.0, tph_hi = 200.0; // phonon-temperature bracket, K
  std::vector<double> gammas = {1.0, 0.1, 0.01};
  double rel_tol = 1e-4;
  int grid_count = 32; // resolution of the emitted (T_x, T_ph) grid
};

struct SweepConfig {
  SweepAxis axis1, axis2;
  std::vector<std::string> quantities; // subset of the known quantity columns
};

struct RunConfig {
  ModelInputs model;
  Command command = Command::SolveCondensate;
  SteadyStateOptions steady;
  GainGridOptions gain{1e4, 200, true};
  CondensateOptions condensate;
  PhaseDiagramOptions phase;
  RefrigeratorOptions fridge;
  std::optional<SweepConfig> sweep;
  OutputOptions output;
};

const std::vector<std::string>& known_quantities();

// The GaAs-microcavity default parameter set; every command runs on
// it unmodified.
RunConfig default_preset();

// Strict parse: unknown keys, missing unit tags, or violated invariants are
// ConfigErrors carrying the path to the offending field.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& config);

// Applies "dotted.key=value" on top of the JSON form of `config` and
// re-parses, so overrides go through exactly the same validation.
RunConfig apply_override(const RunConfig& config, const std::string& dotted_key,
                         const std::string& value);

// "5 meV" / "1.7 ps^-1" / "10 K" -> internal units; `kelvin` selects the
// temperature dimension (K) versus the hbar=1 energy/rate dimension.
double parse_quantity(const std::string& text, bool kelvin, const std::string& path);

} // namespace heng
