#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "heng/errors.hpp"
#include "heng/run.hpp"
#include "helpers.hpp"

using namespace heng;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

} // namespace

TEST_CASE("default preset carries the GaAs parameter set") {
  const RunConfig c = default_preset();
  CHECK(c.model.engine.e2 == doctest::Approx(5.0 * kMeV).epsilon(1e-14));
  CHECK(c.model.engine.e3 - c.model.engine.e2 ==
        doctest::Approx(1000.0 * kMeV).epsilon(1e-14));
  CHECK(c.model.engine.detuning() == doctest::Approx(0.0));
  CHECK(c.model.engine.g_c == 0.048);
  CHECK(c.model.engine.gamma == 1.0); // 1/gamma = 1 ps
  CHECK(c.model.engine.M == 10000);
  CHECK(c.model.cold.kind == BathKind::LorentzianCold);
  CHECK(c.model.cold.alpha == 0.1);
  CHECK(c.model.cold.width == 1.7);
  CHECK(c.model.cold.temperature == 10.0);
  CHECK(c.model.cold.center_or_edge == c.model.engine.e2);
  CHECK(c.model.hot.kind == BathKind::StepHot);
  CHECK(c.model.hot.alpha == 0.2);
  CHECK(c.model.hot.center_or_edge == doctest::Approx(1000.0 * kMeV).epsilon(1e-14));
  CHECK(c.model.hot.center_or_edge - c.model.hot.mu ==
        doctest::Approx(8.0 * kMeV).epsilon(1e-10));
  CHECK(c.model.hot.temperature == 200.0);
}

TEST_CASE("quantity parsing") {
  CHECK(parse_quantity("5 meV", false, "x") == doctest::Approx(5.0 * kMeV));
  CHECK(parse_quantity("1.7 ps^-1", false, "x") == 1.7);
  CHECK(parse_quantity("1 ps", false, "x") == 1.0);
  CHECK(parse_quantity("10 K", true, "x") == 10.0);
  CHECK_THROWS_AS(parse_quantity("5", false, "x"), ConfigError);
  CHECK_THROWS_AS(parse_quantity("5 meV extra", false, "x"), ConfigError);
  CHECK_THROWS_AS(parse_quantity("5 K", false, "x"), ConfigError);
  CHECK_THROWS_AS(parse_quantity("5 meV", true, "x"), ConfigError);
}

TEST_CASE("the same energy in different units agrees") {
  const double a = parse_quantity("5 meV", false, "x");
  const double b = parse_quantity("7.596 ps^-1", false, "x");
  CHECK(std::abs(a - b) / a < 1e-4);
}

TEST_CASE("validation errors name the offending field") {
  json j = to_json(default_preset());
  SUBCASE("negative temperature") {
    j["hot"]["temperature"] = "-5 K";
    try {
      parse_config(j);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("hot.temperature") != std::string::npos);
    }
  }
  SUBCASE("unknown key") {
    j["engine"]["e4"] = "1 meV";
    try {
      parse_config(j);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("engine.e4") != std::string::npos);
      CHECK(std::string(e.what()).find("unknown key") != std::string::npos);
    }
  }
  SUBCASE("missing unit tag") {
    j["engine"]["e2"] = 5.0;
    try {
      parse_config(j);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("engine.e2") != std::string::npos);
    }
  }
  SUBCASE("gamma and lifetime are exclusive") {
    j["engine"]["lifetime"] = "1 ps";
    CHECK_THROWS_AS(parse_config(j), ConfigError);
  }
}

TEST_CASE("round-trip through emission for randomized configs") {
  std::mt19937_64 rng(4096);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    RunConfig c = default_preset();
    c.model.engine.e2 = (3.0 + 5.0 * u(rng)) * kMeV;
    c.model.engine.e3 = c.model.engine.e2 + (900.0 + 200.0 * u(rng)) * kMeV;
    c.model.engine.omega = c.model.engine.e3 - c.model.engine.e2 -
                           (-1.0 + 2.0 * u(rng)) * kMeV;
    c.model.engine.g_c = 0.01 + 0.1 * u(rng);
    c.model.engine.gamma = 2.0 * u(rng);
    c.model.engine.M = 1 + static_cast<long>(1e5 * u(rng));
    c.model.cold.alpha = 0.02 + 0.2 * u(rng);
    c.model.cold.center_or_edge = c.model.engine.e2;
    c.model.cold.width = 0.5 + 2.0 * u(rng);
    c.model.cold.temperature = 2.0 + 60.0 * u(rng);
    c.model.hot.alpha = 0.05 + 0.3 * u(rng);
    c.model.hot.center_or_edge = c.model.engine.e3 - (5.0 + 5.0 * u(rng)) * kMeV;
    c.model.hot.mu = c.model.hot.center_or_edge - (2.0 + 20.0 * u(rng)) * kMeV;
    c.model.hot.temperature = 50.0 + 300.0 * u(rng);
    c.command = static_cast<Command>(k % 7);
    c.output.precision = 3 + (k % 14);
    c.steady.N = 100.0 * u(rng);
    if (k % 3 == 0) c.steady.Omega = 2.0 * u(rng);
    if (k % 2 == 0) {
      SweepConfig sc;
      sc.axis1 = SweepAxis{SweepParam::Th, 60.0, 400.0, 16, false};
      sc.axis2 = SweepAxis{SweepParam::Gamma, 0.01, 1.0, 8, true};
      sc.quantities = {"N_c", "net_power"};
      c.sweep = sc;
    }

    const json j1 = to_json(c);
    const RunConfig c2 = parse_config(j1);
    const json j2 = to_json(c2);
    REQUIRE(j1 == j2);
    CHECK(c2.model.engine.e2 == c.model.engine.e2);
    CHECK(c2.model.hot.mu == c.model.hot.mu);
    CHECK(c2.model.cold.temperature == c.model.cold.temperature);
    CHECK(c2.command == c.command);
  }
}

TEST_CASE("dotted-path overrides") {
  const RunConfig base = default_preset();
  const RunConfig c = apply_override(base, "engine.e2", "6 meV");
  CHECK(c.model.engine.e2 == doctest::Approx(6.0 * kMeV));
  const RunConfig c2 = apply_override(base, "output.precision", "12");
  CHECK(c2.output.precision == 12);
  CHECK_THROWS_AS(apply_override(base, "engine.bogus", "1 meV"), ConfigError);
}

TEST_CASE("run emits data, manifest, and checksums deterministically") {
  namespace fs = std::filesystem;
  RunConfig c = default_preset();
  c.command = Command::GainCurve;
  c.gain.n_max = 400.0;
  c.gain.points = 24;

  const fs::path dir1 = fs::temp_directory_path() / "heng_test_run1";
  const fs::path dir2 = fs::temp_directory_path() / "heng_test_run2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  std::ostringstream log;

  c.output.directory = dir1.string();
  REQUIRE(run(c, ExecPolicy::Parallel, log) == kExitOk);
  c.output.directory = dir2.string();
  REQUIRE(run(c, ExecPolicy::Serial, log) == kExitOk);

  const std::string a = slurp(dir1 / "gain_curve.csv");
  const std::string b = slurp(dir2 / "gain_curve.csv");
  REQUIRE(!a.empty());
  CHECK(a == b); // byte-identical regardless of execution policy

  const json manifest = json::parse(slurp(dir1 / "run_manifest.json"));
  CHECK(manifest["tool"] == "heng");
  CHECK(manifest["command"] == "gain-curve");
  CHECK(manifest["exit_code"] == 0);
  bool found = false;
  for (const auto& f : manifest["files"]) {
    if (f["name"] == "gain_curve.csv") {
      found = true;
      CHECK(f["bytes"].get<std::size_t>() == a.size());
      CHECK(f["fnv1a64"].get<std::string>() == fnv1a64_hex(a));
    }
  }
  CHECK(found);
  CHECK(manifest["first_law_residual"]["count"].get<int>() > 0);

  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("exit codes") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "heng_test_exit";
  fs::remove_all(dir);
  std::ostringstream log;

  SUBCASE("numeric failure is 3") {
    RunConfig c = default_preset();
    c.command = Command::SolveCondensate;
    c.model = test::fig8_inputs();
    c.model.engine.gamma = 1e-4;
    c.model.hot.temperature = 9.0;
    c.model.cold.temperature = 9.0;
    c.output.directory = dir.string();
    CHECK(run(c, ExecPolicy::Serial, log) == kExitNumeric);
    CHECK(fs::exists(dir / "run_manifest.json")); // manifest on failure too
  }
  SUBCASE("refrigerator command requires mu > omega") {
    RunConfig c = default_preset();
    c.command = Command::RefrigeratorDiagram;
    c.output.directory = dir.string();
    CHECK(run(c, ExecPolicy::Serial, log) == kExitConfig);
  }
  SUBCASE("partial sweep is 4") {
    RunConfig c = default_preset();
    c.command = Command::PowerMap;
    c.model = test::fig8_inputs();
    c.model.engine.gamma = 1e-4; // part of the plane cannot close its bracket
    SweepConfig sc;
    sc.axis1 = SweepAxis{SweepParam::Th, 6.0, 30.0, 3, false};
    sc.axis2 = SweepAxis{SweepParam::Tc, 6.0, 30.0, 3, false};
    c.sweep = sc;
    c.output.directory = dir.string();
    CHECK(run(c, ExecPolicy::Serial, log) == kExitPartial);
    CHECK(fs::exists(dir / "power_map.csv")); // completed points still emitted
  }
  fs::remove_all(dir);
}

TEST_CASE("phase-diagram run emits labeled boundaries and the reversible line") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "heng_test_pd";
  fs::remove_all(dir);
  std::ostringstream log;

  RunConfig c = default_preset();
  c.command = Command::PhaseDiagram;
  c.phase.tc_lo = 8.0;
  c.phase.tc_hi = 12.0;
  c.phase.tc_count = 2;
  c.phase.gammas = {1.0, 0.01};
  c.output.directory = dir.string();
  REQUIRE(run(c, ExecPolicy::Serial, log) == kExitOk);

  const std::string csv = slurp(dir / "phase_boundaries.csv");
  CHECK(csv.find("gamma=1,") != std::string::npos);
  CHECK(csv.find("gamma=0.01,") != std::string::npos);
  CHECK(csv.find("reversible,") != std::string::npos);
  CHECK(csv.find("\r") == std::string::npos); // LF line endings
  fs::remove_all(dir);
}

TEST_CASE("csv quoting and number formatting") {
  CHECK(csv_quote("plain") == "plain");
  CHECK(csv_quote("a,b") == "\"a,b\"");
  CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(format_double(1.0 / 3.0, 9) == "0.333333333");
  CHECK(format_double(std::nan(""), 9) == "nan");
  CHECK(format_double(12345.678, 4) == "1.235e+04");
}
