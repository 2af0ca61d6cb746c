#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "heng/errors.hpp"
#include "heng/run.hpp"

namespace {

struct CliState {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_dir;
  std::string format;
  int precision = 0;
  bool serial = false;
};

std::pair<std::string, std::string> split_override(const std::string& kv) {
  const auto pos = kv.find('=');
  if (pos == std::string::npos || pos == 0)
    throw heng::ConfigError("--set expects key.path=value, got '" + kv + "'");
  return {kv.substr(0, pos), kv.substr(pos + 1)};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"heng: three-level heat-engine model of driven-dissipative condensation"};
  app.set_version_flag("--version", heng::kVersion);

  CliState cli;
  app.add_option("-c,--config", cli.config_path, "JSON config file (see README)");
  app.add_option("--set", cli.overrides,
                 "Override a config field by dotted path, e.g. --set engine.e2=\"6 meV\"");
  app.add_option("-o,--output-dir", cli.output_dir, "Output directory");
  app.add_option("--format", cli.format, "Output format: csv | json");
  app.add_option("--precision", cli.precision, "Significant digits in data files");
  app.add_flag("--serial", cli.serial, "Run grid evaluations serially");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"steady-state", "Solve the working medium at fixed condensate occupation"},
      {"gain-curve", "Condensate in-scattering rate R(N) over an occupation grid"},
      {"solve-condensate", "Self-consistent condensate occupations M R(N) = gamma N"},
      {"phase-diagram", "Condensation boundary in the (T_c, T_h) plane per gamma"},
      {"power-map", "Net output power over a two-parameter sweep"},
      {"efficiency-map", "Net efficiency over a two-parameter sweep"},
      {"refrigerator-diagram", "Condensation diagram in the mu > omega regime"}};
  for (const auto& [name, description] : commands)
    app.add_subcommand(name, description)->fallthrough();
  app.require_subcommand(0, 1);

  CLI11_PARSE(app, argc, argv);

  try {
    heng::RunConfig config = cli.config_path.empty()
                                 ? heng::default_preset()
                                 : heng::load_config(cli.config_path);
    for (const auto& kv : cli.overrides) {
      const auto [key, value] = split_override(kv);
      config = heng::apply_override(config, key, value);
    }
    for (const auto* sub : app.get_subcommands())
      config.command = heng::parse_command(sub->get_name());
    if (!cli.output_dir.empty()) config.output.directory = cli.output_dir;
    if (!cli.format.empty()) {
      if (cli.format == "csv") config.output.format = heng::OutputFormat::Csv;
      else if (cli.format == "json") config.output.format = heng::OutputFormat::Json;
      else throw heng::ConfigError("--format expects csv | json");
    }
    if (cli.precision != 0) {
      if (cli.precision < 3 || cli.precision > 17)
        throw heng::ConfigError("--precision must be in [3, 17]");
      config.output.precision = cli.precision;
    }

    const heng::ExecPolicy policy =
        cli.serial ? heng::ExecPolicy::Serial : heng::ExecPolicy::Parallel;
    return heng::run(config, policy, std::cerr);
  } catch (const heng::ConfigError& e) {
    std::cerr << "heng: config error: " << e.what() << "\n";
    return heng::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "heng: " << e.what() << "\n";
    return heng::kExitNumeric;
  }
}
