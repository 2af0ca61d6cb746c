#include "heng/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "heng/errors.hpp"

namespace heng {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void require_keys(const json& j, const std::string& path,
                  const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      fail(path + "." + it.key(), "unknown key (strict schema)");
}

double get_quantity(const json& j, const std::string& path, bool kelvin) {
  if (j.is_string()) return parse_quantity(j.get<std::string>(), kelvin, path);
  fail(path, "expected a unit-tagged string like \"5 meV\"");
}

double get_number(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  fail(path, "expected a number");
}

long get_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v == std::floor(v)) return static_cast<long>(v);
  }
  fail(path, "expected an integer");
}

std::string get_string(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  fail(path, "expected a string");
}

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quantity_string(double v, const char* unit) {
  return format_full(v) + " " + unit;
}

void check_finite(double v, const std::string& path) {
  if (!std::isfinite(v)) fail(path, "value must be finite");
}

EngineParams parse_engine(const json& j) {
  require_keys(j, "engine",
               {"e2", "e3", "omega", "g_c", "gamma", "lifetime", "M"});
  EngineParams p;
  if (!j.contains("e2")) fail("engine.e2", "missing");
  if (!j.contains("e3")) fail("engine.e3", "missing");
  if (!j.contains("omega")) fail("engine.omega", "missing");
  if (!j.contains("g_c")) fail("engine.g_c", "missing");
  p.e2 = get_quantity(j.at("e2"), "engine.e2", false);
  p.e3 = get_quantity(j.at("e3"), "engine.e3", false);
  p.omega = get_quantity(j.at("omega"), "engine.omega", false);
  p.g_c = get_quantity(j.at("g_c"), "engine.g_c", false);
  if (j.contains("gamma") && j.contains("lifetime"))
    fail("engine.lifetime", "give either gamma or lifetime, not both");
  if (j.contains("gamma"))
    p.gamma = get_quantity(j.at("gamma"), "engine.gamma", false);
  else if (j.contains("lifetime"))
    p.gamma = get_quantity(j.at("lifetime"), "engine.lifetime", false);
  else
    fail("engine.gamma", "missing (or give engine.lifetime)");
  p.M = j.contains("M") ? get_integer(j.at("M"), "engine.M") : 1;

  check_finite(p.e2, "engine.e2");
  check_finite(p.e3, "engine.e3");
  check_finite(p.omega, "engine.omega");
  if (!(p.e2 > 0.0)) fail("engine.e2", "must be > 0 (e1 = 0 is the energy zero)");
  if (!(p.e3 > p.e2)) fail("engine.e3", "must exceed e2");
  if (!(p.g_c > 0.0)) fail("engine.g_c", "must be > 0");
  if (p.gamma < 0.0) fail("engine.gamma", "must be >= 0");
  if (p.M < 1) fail("engine.M", "must be >= 1");
  return p;
}

BathSpec parse_bath(const json& j, const std::string& path, bool is_cold) {
  require_keys(j, path,
               {"kind", "alpha", "center", "edge", "width", "temperature", "mu"});
  BathSpec b;
  const std::string kind =
      j.contains("kind") ? get_string(j.at("kind"), path + ".kind")
                         : (is_cold ? "lorentzian" : "step");
  if (kind == "lorentzian") b.kind = BathKind::LorentzianCold;
  else if (kind == "step") b.kind = BathKind::StepHot;
  else if (kind == "flat") b.kind = BathKind::Flat;
  else fail(path + ".kind", "unknown kind '" + kind + "' (lorentzian | step | flat)");

  if (!j.contains("alpha")) fail(path + ".alpha", "missing");
  if (!j.contains("temperature")) fail(path + ".temperature", "missing");
  b.alpha = get_quantity(j.at("alpha"), path + ".alpha", false);
  b.temperature = get_quantity(j.at("temperature"), path + ".temperature", true);

  if (b.kind == BathKind::LorentzianCold) {
    if (!j.contains("center")) fail(path + ".center", "missing for a lorentzian bath");
    if (!j.contains("width")) fail(path + ".width", "missing for a lorentzian bath");
    b.center_or_edge = get_quantity(j.at("center"), path + ".center", false);
    b.width = get_quantity(j.at("width"), path + ".width", false);
    if (j.contains("edge")) fail(path + ".edge", "not a lorentzian-bath key");
  } else if (b.kind == BathKind::StepHot) {
    if (!j.contains("edge")) fail(path + ".edge", "missing for a step bath");
    b.center_or_edge = get_quantity(j.at("edge"), path + ".edge", false);
    if (j.contains("center")) fail(path + ".center", "not a step-bath key");
    if (j.contains("width")) fail(path + ".width", "not a step-bath key");
  } else {
    for (const char* k : {"center", "edge", "width"})
      if (j.contains(k)) fail(path + "." + k, "not a flat-bath key");
  }
  if (j.contains("mu")) b.mu = get_quantity(j.at("mu"), path + ".mu", false);
  if (is_cold && b.mu != 0.0) fail(path + ".mu", "cold bath has mu = 0");

  if (!(b.temperature > 0.0)) fail(path + ".temperature", "must be > 0 K");
  if (b.alpha < 0.0) fail(path + ".alpha", "must be >= 0");
  if (b.kind == BathKind::LorentzianCold && !(b.width > 0.0))
    fail(path + ".width", "must be > 0");
  return b;
}

SweepAxis parse_axis(const json& j, const std::string& path) {
  require_keys(j, path, {"param", "min", "max", "count", "scale"});
  SweepAxis a;
  if (!j.contains("param")) fail(path + ".param", "missing");
  a.param = parse_sweep_param(get_string(j.at("param"), path + ".param"));
  const bool kelvin = a.param == SweepParam::Th || a.param == SweepParam::Tc;
  if (!j.contains("min")) fail(path + ".min", "missing");
  if (!j.contains("max")) fail(path + ".max", "missing");
  if (a.param == SweepParam::M) {
    a.lo = static_cast<double>(get_integer(j.at("min"), path + ".min"));
    a.hi = static_cast<double>(get_integer(j.at("max"), path + ".max"));
  } else {
    a.lo = get_quantity(j.at("min"), path + ".min", kelvin);
    a.hi = get_quantity(j.at("max"), path + ".max", kelvin);
  }
  a.count = j.contains("count")
                ? static_cast<int>(get_integer(j.at("count"), path + ".count"))
                : 64;
  if (a.count < 2) fail(path + ".count", "must be >= 2");
  if (!(a.hi > a.lo)) fail(path + ".max", "must exceed min");
  if (j.contains("scale")) {
    const std::string s = get_string(j.at("scale"), path + ".scale");
    if (s == "log") a.log_scale = true;
    else if (s == "linear") a.log_scale = false;
    else fail(path + ".scale", "expected linear | log");
  }
  if (a.log_scale && !(a.lo > 0.0)) fail(path + ".min", "log scale requires min > 0");

  // Ranges must stay inside the parameter's validity domain.
  switch (a.param) {
    case SweepParam::Th:
    case SweepParam::Tc:
      if (!(a.lo > 0.0)) fail(path + ".min", "temperatures must be > 0 K");
      break;
    case SweepParam::AlphaC:
    case SweepParam::AlphaH:
    case SweepParam::Gamma:
      if (a.lo < 0.0) fail(path + ".min", "rates must be >= 0");
      break;
    case SweepParam::Gc:
      if (!(a.lo > 0.0)) fail(path + ".min", "g_c must be > 0");
      break;
    case SweepParam::M:
      if (a.lo < 1.0) fail(path + ".min", "M must be >= 1");
      break;
    case SweepParam::Mu:
    case SweepParam::E0:
      break;
  }
  return a;
}

std::vector<double> parse_gammas(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const double g =
        get_quantity(j.at(i), path + "[" + std::to_string(i) + "]", false);
    if (!(g >= 0.0)) fail(path + "[" + std::to_string(i) + "]", "must be >= 0");
    out.push_back(g);
  }
  return out;
}

const char* unit_for_axis(SweepParam p) {
  switch (p) {
    case SweepParam::Th:
    case SweepParam::Tc: return "K";
    default: return "ps^-1";
  }
}

} // namespace

Command parse_command(const std::string& name) {
  if (name == "steady-state") return Command::SteadyState;
  if (name == "gain-curve") return Command::GainCurve;
  if (name == "solve-condensate") return Command::SolveCondensate;
  if (name == "phase-diagram") return Command::PhaseDiagram;
  if (name == "power-map") return Command::PowerMap;
  if (name == "efficiency-map") return Command::EfficiencyMap;
  if (name == "refrigerator-diagram") return Command::RefrigeratorDiagram;
  throw ConfigError("unknown command '" + name + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::SteadyState: return "steady-state";
    case Command::GainCurve: return "gain-curve";
    case Command::SolveCondensate: return "solve-condensate";
    case Command::PhaseDiagram: return "phase-diagram";
    case Command::PowerMap: return "power-map";
    case Command::EfficiencyMap: return "efficiency-map";
    case Command::RefrigeratorDiagram: return "refrigerator-diagram";
  }
  return "?";
}

const std::vector<std::string>& known_quantities() {
  static const std::vector<std::string> q = {
      "N_c",       "net_power", "net_efficiency", "eta_carnot",
      "inversion", "residual",  "min_eig",        "first_order"};
  return q;
}

double parse_quantity(const std::string& text, bool kelvin, const std::string& path) {
  std::istringstream in(text);
  double value = 0.0;
  std::string unit, extra;
  if (!(in >> value) || !(in >> unit) || (in >> extra))
    fail(path, "expected \"<number> <unit>\", got '" + text + "'");
  if (kelvin) {
    if (unit != "K") fail(path, "expected a temperature in K, got '" + unit + "'");
    return value;
  }
  if (unit == "K") fail(path, "got a temperature where an energy/rate is needed");
  try {
    return to_internal(value, unit);
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

RunConfig default_preset() {
  RunConfig c;
  c.model.engine.e2 = 5.0 * kMeV;
  c.model.engine.e3 = 1005.0 * kMeV;
  c.model.engine.omega = 1000.0 * kMeV; // Delta = 0
  c.model.engine.g_c = 0.048;
  c.model.engine.gamma = 1.0;
  c.model.engine.M = 10000;

  c.model.cold.kind = BathKind::LorentzianCold;
  c.model.cold.alpha = 0.1;
  c.model.cold.center_or_edge = c.model.engine.e2;
  c.model.cold.width = 1.7;
  c.model.cold.temperature = 10.0;
  c.model.cold.mu = 0.0;

  c.model.hot.kind = BathKind::StepHot;
  c.model.hot.alpha = 0.2;
  c.model.hot.center_or_edge = 1000.0 * kMeV;
  c.model.hot.mu = 992.0 * kMeV;
  c.model.hot.temperature = 200.0;
  return c;
}

RunConfig parse_config(const json& j) {
  require_keys(j, "config",
               {"engine", "cold", "hot", "command", "steady_state", "gain_curve",
                "condensate", "phase_diagram", "refrigerator", "sweep", "output"});
  RunConfig c;
  if (!j.contains("engine")) fail("engine", "missing");
  if (!j.contains("cold")) fail("cold", "missing");
  if (!j.contains("hot")) fail("hot", "missing");
  c.model.engine = parse_engine(j.at("engine"));
  c.model.cold = parse_bath(j.at("cold"), "cold", true);
  c.model.hot = parse_bath(j.at("hot"), "hot", false);

  if (j.contains("command"))
    c.command = parse_command(get_string(j.at("command"), "command"));

  if (j.contains("steady_state")) {
    const json& s = j.at("steady_state");
    require_keys(s, "steady_state", {"N", "Omega"});
    if (s.contains("N")) {
      c.steady.N = get_number(s.at("N"), "steady_state.N");
      if (c.steady.N < 0.0) fail("steady_state.N", "must be >= 0");
    }
    if (s.contains("Omega")) {
      c.steady.Omega = get_quantity(s.at("Omega"), "steady_state.Omega", false);
      if (*c.steady.Omega < 0.0) fail("steady_state.Omega", "must be >= 0");
    }
  }

  if (j.contains("gain_curve")) {
    const json& g = j.at("gain_curve");
    require_keys(g, "gain_curve", {"n_max", "points", "grid"});
    if (g.contains("n_max")) c.gain.n_max = get_number(g.at("n_max"), "gain_curve.n_max");
    if (!(c.gain.n_max > 0.0)) fail("gain_curve.n_max", "must be > 0");
    if (g.contains("points"))
      c.gain.points = static_cast<int>(get_integer(g.at("points"), "gain_curve.points"));
    if (c.gain.points < 2) fail("gain_curve.points", "must be >= 2");
    if (g.contains("grid")) {
      const std::string s = get_string(g.at("grid"), "gain_curve.grid");
      if (s == "linear") c.gain.linear_grid = true;
      else if (s == "solver") c.gain.linear_grid = false;
      else fail("gain_curve.grid", "expected linear | solver");
    }
  }

  if (j.contains("condensate")) {
    const json& s = j.at("condensate");
    require_keys(s, "condensate", {"n_max", "grid_points"});
    if (s.contains("n_max"))
      c.condensate.n_max = get_number(s.at("n_max"), "condensate.n_max");
    if (!(c.condensate.n_max > 0.0)) fail("condensate.n_max", "must be > 0");
    if (s.contains("grid_points"))
      c.condensate.grid_points =
          static_cast<int>(get_integer(s.at("grid_points"), "condensate.grid_points"));
    if (c.condensate.grid_points < 24) fail("condensate.grid_points", "must be >= 24");
  }

  if (j.contains("phase_diagram")) {
    const json& p = j.at("phase_diagram");
    require_keys(p, "phase_diagram",
                 {"tc_min", "tc_max", "tc_count", "th_bracket", "gammas", "rel_tol"});
    if (p.contains("tc_min"))
      c.phase.tc_lo = get_quantity(p.at("tc_min"), "phase_diagram.tc_min", true);
    if (p.contains("tc_max"))
      c.phase.tc_hi = get_quantity(p.at("tc_max"), "phase_diagram.tc_max", true);
    if (p.contains("tc_count"))
      c.phase.tc_count =
          static_cast<int>(get_integer(p.at("tc_count"), "phase_diagram.tc_count"));
    if (p.contains("th_bracket")) {
      const json& b = p.at("th_bracket");
      if (!b.is_array() || b.size() != 2)
        fail("phase_diagram.th_bracket", "expected [min, max]");
      c.phase.th_lo = get_quantity(b.at(0), "phase_diagram.th_bracket[0]", true);
      c.phase.th_hi = get_quantity(b.at(1), "phase_diagram.th_bracket[1]", true);
    }
    if (p.contains("gammas"))
      c.phase.gammas = parse_gammas(p.at("gammas"), "phase_diagram.gammas");
    if (p.contains("rel_tol"))
      c.phase.rel_tol = get_number(p.at("rel_tol"), "phase_diagram.rel_tol");
    if (!(c.phase.tc_hi > c.phase.tc_lo) || !(c.phase.tc_lo > 0.0))
      fail("phase_diagram.tc_max", "need 0 < tc_min < tc_max");
    if (!(c.phase.th_hi > c.phase.th_lo) || !(c.phase.th_lo > 0.0))
      fail("phase_diagram.th_bracket", "need 0 < min < max");
    if (c.phase.tc_count < 2) fail("phase_diagram.tc_count", "must be >= 2");
    if (!(c.phase.rel_tol > 0.0)) fail("phase_diagram.rel_tol", "must be > 0");
  }

  if (j.contains("refrigerator")) {
    const json& p = j.at("refrigerator");
    require_keys(p, "refrigerator",
                 {"tx_min", "tx_max", "tx_count", "tph_bracket", "gammas",
                  "rel_tol", "grid_count"});
    if (p.contains("tx_min"))
      c.fridge.tx_lo = get_quantity(p.at("tx_min"), "refrigerator.tx_min", true);
    if (p.contains("tx_max"))
      c.fridge.tx_hi = get_quantity(p.at("tx_max"), "refrigerator.tx_max", true);
    if (p.contains("tx_count"))
      c.fridge.tx_count =
          static_cast<int>(get_integer(p.at("tx_count"), "refrigerator.tx_count"));
    if (p.contains("tph_bracket")) {
      const json& b = p.at("tph_bracket");
      if (!b.is_array() || b.size() != 2)
        fail("refrigerator.tph_bracket", "expected [min, max]");
      c.fridge.tph_lo = get_quantity(b.at(0), "refrigerator.tph_bracket[0]", true);
      c.fridge.tph_hi = get_quantity(b.at(1), "refrigerator.tph_bracket[1]", true);
    }
    if (p.contains("gammas"))
      c.fridge.gammas = parse_gammas(p.at("gammas"), "refrigerator.gammas");
    if (p.contains("rel_tol"))
      c.fridge.rel_tol = get_number(p.at("rel_tol"), "refrigerator.rel_tol");
    if (p.contains("grid_count"))
      c.fridge.grid_count =
          static_cast<int>(get_integer(p.at("grid_count"), "refrigerator.grid_count"));
    if (!(c.fridge.tx_hi > c.fridge.tx_lo) || !(c.fridge.tx_lo > 0.0))
      fail("refrigerator.tx_max", "need 0 < tx_min < tx_max");
    if (!(c.fridge.tph_hi > c.fridge.tph_lo) || !(c.fridge.tph_lo > 0.0))
      fail("refrigerator.tph_bracket", "need 0 < min < max");
    if (c.fridge.tx_count < 2) fail("refrigerator.tx_count", "must be >= 2");
    if (c.fridge.grid_count < 2) fail("refrigerator.grid_count", "must be >= 2");
    if (!(c.fridge.rel_tol > 0.0)) fail("refrigerator.rel_tol", "must be > 0");
  }

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    require_keys(s, "sweep", {"axis1", "axis2", "quantities"});
    if (!s.contains("axis1")) fail("sweep.axis1", "missing");
    if (!s.contains("axis2")) fail("sweep.axis2", "missing");
    SweepConfig sc;
    sc.axis1 = parse_axis(s.at("axis1"), "sweep.axis1");
    sc.axis2 = parse_axis(s.at("axis2"), "sweep.axis2");
    if (s.contains("quantities")) {
      const json& q = s.at("quantities");
      if (!q.is_array()) fail("sweep.quantities", "expected an array");
      for (std::size_t i = 0; i < q.size(); ++i) {
        const std::string name =
            get_string(q.at(i), "sweep.quantities[" + std::to_string(i) + "]");
        if (std::find(known_quantities().begin(), known_quantities().end(), name) ==
            known_quantities().end())
          fail("sweep.quantities[" + std::to_string(i) + "]",
               "unknown quantity '" + name + "'");
        sc.quantities.push_back(name);
      }
    }
    c.sweep = std::move(sc);
  }

  if (j.contains("output")) {
    const json& o = j.at("output");
    require_keys(o, "output", {"directory", "format", "precision"});
    if (o.contains("directory"))
      c.output.directory = get_string(o.at("directory"), "output.directory");
    if (o.contains("format")) {
      const std::string f = get_string(o.at("format"), "output.format");
      if (f == "csv") c.output.format = OutputFormat::Csv;
      else if (f == "json") c.output.format = OutputFormat::Json;
      else fail("output.format", "expected csv | json");
    }
    if (o.contains("precision"))
      c.output.precision =
          static_cast<int>(get_integer(o.at("precision"), "output.precision"));
    if (c.output.precision < 3 || c.output.precision > 17)
      fail("output.precision", "must be in [3, 17]");
  }

  c.model.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in '" + path + "': " + e.what());
  }
  return parse_config(j);
}

nlohmann::json to_json(const RunConfig& c) {
  json j;
  j["engine"] = {
      {"e2", quantity_string(c.model.engine.e2, "ps^-1")},
      {"e3", quantity_string(c.model.engine.e3, "ps^-1")},
      {"omega", quantity_string(c.model.engine.omega, "ps^-1")},
      {"g_c", quantity_string(c.model.engine.g_c, "ps^-1")},
      {"gamma", quantity_string(c.model.engine.gamma, "ps^-1")},
      {"M", c.model.engine.M},
  };
  auto bath_json = [](const BathSpec& b, bool is_cold) {
    json o;
    o["kind"] = to_string(b.kind);
    o["alpha"] = quantity_string(b.alpha, "ps^-1");
    if (b.kind == BathKind::LorentzianCold) {
      o["center"] = quantity_string(b.center_or_edge, "ps^-1");
      o["width"] = quantity_string(b.width, "ps^-1");
    } else if (b.kind == BathKind::StepHot) {
      o["edge"] = quantity_string(b.center_or_edge, "ps^-1");
    }
    o["temperature"] = quantity_string(b.temperature, "K");
    if (!is_cold) o["mu"] = quantity_string(b.mu, "ps^-1");
    return o;
  };
  j["cold"] = bath_json(c.model.cold, true);
  j["hot"] = bath_json(c.model.hot, false);
  j["command"] = to_string(c.command);
  j["steady_state"]["N"] = c.steady.N;
  if (c.steady.Omega)
    j["steady_state"]["Omega"] = quantity_string(*c.steady.Omega, "ps^-1");
  j["gain_curve"] = {{"n_max", c.gain.n_max},
                     {"points", c.gain.points},
                     {"grid", c.gain.linear_grid ? "linear" : "solver"}};
  j["condensate"] = {{"n_max", c.condensate.n_max},
                     {"grid_points", c.condensate.grid_points}};
  json gam = json::array();
  for (double g : c.phase.gammas) gam.push_back(quantity_string(g, "ps^-1"));
  j["phase_diagram"] = {{"tc_min", quantity_string(c.phase.tc_lo, "K")},
                        {"tc_max", quantity_string(c.phase.tc_hi, "K")},
                        {"tc_count", c.phase.tc_count},
                        {"th_bracket",
                         {quantity_string(c.phase.th_lo, "K"),
                          quantity_string(c.phase.th_hi, "K")}},
                        {"gammas", gam},
                        {"rel_tol", c.phase.rel_tol}};
  json fgam = json::array();
  for (double g : c.fridge.gammas) fgam.push_back(quantity_string(g, "ps^-1"));
  j["refrigerator"] = {{"tx_min", quantity_string(c.fridge.tx_lo, "K")},
                       {"tx_max", quantity_string(c.fridge.tx_hi, "K")},
                       {"tx_count", c.fridge.tx_count},
                       {"tph_bracket",
                        {quantity_string(c.fridge.tph_lo, "K"),
                         quantity_string(c.fridge.tph_hi, "K")}},
                       {"gammas", fgam},
                       {"rel_tol", c.fridge.rel_tol},
                       {"grid_count", c.fridge.grid_count}};
  if (c.sweep) {
    auto axis_json = [](const SweepAxis& a) {
      const char* unit = unit_for_axis(a.param);
      json o;
      o["param"] = to_string(a.param);
      if (a.param == SweepParam::M) {
        o["min"] = static_cast<long>(a.lo);
        o["max"] = static_cast<long>(a.hi);
      } else {
        o["min"] = quantity_string(a.lo, unit);
        o["max"] = quantity_string(a.hi, unit);
      }
      o["count"] = a.count;
      o["scale"] = a.log_scale ? "log" : "linear";
      return o;
    };
    j["sweep"] = {{"axis1", axis_json(c.sweep->axis1)},
                  {"axis2", axis_json(c.sweep->axis2)}};
    if (!c.sweep->quantities.empty()) j["sweep"]["quantities"] = c.sweep->quantities;
  }
  j["output"] = {{"directory", c.output.directory},
                 {"format", c.output.format == OutputFormat::Csv ? "csv" : "json"},
                 {"precision", c.output.precision}};
  return j;
}

RunConfig apply_override(const RunConfig& config, const std::string& dotted_key,
                         const std::string& value) {
  json j = to_json(config);
  json* node = &j;
  std::string key = dotted_key;
  for (std::size_t pos = key.find('.'); pos != std::string::npos;
       pos = key.find('.')) {
    const std::string head = key.substr(0, pos);
    key = key.substr(pos + 1);
    if (!node->is_object()) throw ConfigError(dotted_key + ": not an object path");
    node = &(*node)[head];
  }
  json parsed;
  try {
    parsed = json::parse(value);
  } catch (const json::parse_error&) {
    parsed = value; // plain strings such as "5 meV"
  }
  (*node)[key] = parsed;
  return parse_config(j);
}

} // namespace heng
