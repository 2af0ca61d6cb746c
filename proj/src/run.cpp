#include "heng/run.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "heng/errors.hpp"

namespace heng {

namespace {

using nlohmann::json;

constexpr const char* kSchemaTag = "heng csv v1";

json rho_to_json(const DensityMatrix3& rho) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < 3; ++i) {
    json re_row = json::array(), im_row = json::array();
    for (int k = 0; k < 3; ++k) {
      re_row.push_back(rho.m(i, k).real());
      im_row.push_back(rho.m(i, k).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  return {{"re", re}, {"im", im}};
}

json report_to_json(const SteadyStateReport& rep) {
  const NetOutput net = net_power_and_efficiency(rep);
  json j;
  j["rho"] = rho_to_json(rep.rho);
  j["rates"] = {{"Rc2", rep.rates.Rc2}, {"Rc3", rep.rates.Rc3},
                {"Rh2", rep.rates.Rh2}, {"Rh3", rep.rates.Rh3},
                {"Rc", rep.rates.Rc()}, {"Rh", rep.rates.Rh()},
                {"R", rep.rates.R}};
  j["power_W"] = rep.power_W;
  j["Qc_dot"] = rep.Qc_dot;
  j["Qc_orientation"] = current_orientation(rep.Qc_dot);
  j["Eh_dot"] = rep.Eh_dot;
  j["Eh_orientation"] = current_orientation(rep.Eh_dot);
  j["Qh_dot"] = rep.Qh_dot;
  j["work_in_dot"] = rep.work_in_dot;
  j["net_power"] = net.net_power;
  if (net.net_efficiency) j["net_efficiency"] = *net.net_efficiency;
  j["first_law_residual"] = rep.first_law_residual;
  j["min_eigenvalue"] = rep.min_eigenvalue;
  j["positivity_ok"] = rep.positivity_ok;
  const auto inv = inversion_ratio(rep.rho);
  if (inv) j["inversion"] = *inv;
  return j;
}

struct ResidualStats {
  std::vector<double> residuals;
  std::size_t positivity_violations = 0;
  void add(const SteadyStateReport& rep) {
    residuals.push_back(rep.first_law_residual);
    if (!rep.positivity_ok) ++positivity_violations;
  }
};

double quantity_value(const std::string& name, const PhasePoint& pt,
                      const ModelInputs& local) {
  if (name == "N_c") return pt.N_c;
  if (name == "net_power") return pt.net_power;
  if (name == "net_efficiency") return pt.net_efficiency;
  if (name == "eta_carnot")
    return 1.0 - local.cold.temperature / local.hot.temperature;
  if (name == "inversion") return pt.inversion;
  if (name == "residual") return pt.residual;
  if (name == "min_eig") return pt.min_eig;
  if (name == "first_order") return pt.first_order_hint ? 1.0 : 0.0;
  return std::numeric_limits<double>::quiet_NaN();
}

std::string diagram_csv(const PhaseDiagram& diagram, const ModelInputs& fixed,
                        const std::vector<std::string>& quantities, int precision,
                        const std::string& schema_name) {
  CsvBuilder csv(precision);
  csv.comment(std::string(kSchemaTag) + " " + schema_name);
  std::vector<std::string> cols = {to_string(diagram.axis1.param),
                                   to_string(diagram.axis2.param), "condensed"};
  cols.insert(cols.end(), quantities.begin(), quantities.end());
  cols.push_back("failed");
  csv.header(cols);
  for (std::size_t i1 = 0; i1 < diagram.a1.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < diagram.a2.size(); ++i2) {
      const PhasePoint& pt = diagram.at(i1, i2);
      const ModelInputs local =
          with_param(with_param(fixed, diagram.axis1.param, diagram.a1[i1]),
                     diagram.axis2.param, diagram.a2[i2]);
      csv.begin_row();
      csv.add(diagram.a1[i1]);
      csv.add(diagram.a2[i2]);
      csv.add(pt.condensed);
      for (const auto& q : quantities) csv.add(quantity_value(q, pt, local));
      csv.add(pt.failed);
      csv.end_row();
    }
  }
  return csv.str();
}

json diagram_json(const PhaseDiagram& diagram, const ModelInputs& fixed,
                  const std::vector<std::string>& quantities) {
  json rows = json::array();
  for (std::size_t i1 = 0; i1 < diagram.a1.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < diagram.a2.size(); ++i2) {
      const PhasePoint& pt = diagram.at(i1, i2);
      const ModelInputs local =
          with_param(with_param(fixed, diagram.axis1.param, diagram.a1[i1]),
                     diagram.axis2.param, diagram.a2[i2]);
      json row;
      row[to_string(diagram.axis1.param)] = diagram.a1[i1];
      row[to_string(diagram.axis2.param)] = diagram.a2[i2];
      row["condensed"] = pt.condensed;
      for (const auto& q : quantities) {
        const double v = quantity_value(q, pt, local);
        if (std::isnan(v)) row[q] = nullptr; else row[q] = v;
      }
      row["failed"] = pt.failed;
      if (pt.failed) row["error"] = pt.error;
      rows.push_back(row);
    }
  }
  return rows;
}

void collect_sweep_stats(const PhaseDiagram& diagram, ResidualStats& stats,
                         RunManifest& manifest) {
  for (std::size_t k = 0; k < diagram.points.size(); ++k) {
    const PhasePoint& pt = diagram.points[k];
    if (pt.failed) {
      std::ostringstream msg;
      msg << "grid point " << k << " (" << to_string(diagram.axis1.param) << " = "
          << diagram.a1[k / diagram.a2.size()] << ", "
          << to_string(diagram.axis2.param) << " = "
          << diagram.a2[k % diagram.a2.size()] << "): " << pt.error;
      manifest.failures.push_back(msg.str());
    } else if (std::isfinite(pt.residual)) {
      stats.residuals.push_back(pt.residual);
      if (!pt.positivity_ok) ++stats.positivity_violations;
    }
  }
}

std::vector<std::string> default_quantities(Command cmd) {
  if (cmd == Command::PowerMap)
    return {"N_c", "net_power", "residual"};
  if (cmd == Command::EfficiencyMap)
    return {"N_c", "net_efficiency", "eta_carnot", "residual"};
  return {"N_c", "net_power", "net_efficiency", "inversion", "residual"};
}

std::string boundary_csv(const std::vector<std::pair<std::string, Boundary>>& sets,
                         const std::string& scan_name, const std::string& bisect_name,
                         const EngineParams& engine, const BathSpec& hot,
                         const std::vector<double>& scan_values, bool tx_tph_axes,
                         int precision) {
  CsvBuilder csv(precision);
  csv.comment(std::string(kSchemaTag) + " boundary");
  csv.header({"label", scan_name, bisect_name, "linear_lo", "linear_hi",
              "root_lo", "root_hi", "first_order"});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& [label, b] : sets) {
    for (const auto& pt : b.points) {
      csv.begin_row();
      csv.add(label);
      csv.add(pt.scan);
      csv.add(pt.value());
      csv.add(pt.lo);
      csv.add(pt.hi);
      csv.add(pt.first_order ? pt.root_lo : nan);
      csv.add(pt.first_order ? pt.root_hi : nan);
      csv.add(pt.first_order);
      csv.end_row();
    }
  }
  // Entropy-balance overlay: e2/T_cold = (e3 - mu)/T_hot.
  const double slope = reversible_slope(engine, hot);
  auto overlay_row = [&](const char* label, double x, double y) {
    csv.begin_row();
    csv.add(std::string(label));
    csv.add(x);
    csv.add(y);
    for (int k = 0; k < 4; ++k) csv.add(nan);
    csv.add(false);
    csv.end_row();
  };
  for (double s : scan_values)
    // scan axis is the cold temperature unless the diagram scans T_x.
    overlay_row("reversible", s, tx_tph_axes ? s / slope : s * slope);
  if (tx_tph_axes)
    for (double s : scan_values) overlay_row("Tx=Tph", s, s);
  return csv.str();
}

int run_steady_state(const RunConfig& c, RunManifest& manifest, ResidualStats& stats) {
  const double omega_rabi =
      c.steady.Omega ? *c.steady.Omega
                     : rabi_from_population(c.model.engine.g_c, c.steady.N);
  const Generator gen =
      assemble_generator(c.model.engine, omega_rabi, c.model.cold, c.model.hot);
  const DensityMatrix3 rho = steady_state(gen);
  const SteadyStateReport rep =
      currents(rho, gen.frame, c.model.cold, c.model.hot, c.model.engine);
  stats.add(rep);

  if (c.output.format == OutputFormat::Json) {
    json j = report_to_json(rep);
    j["Omega"] = omega_rabi;
    j["N"] = c.steady.N;
    j["frame"] = {{"theta", gen.frame.theta},
                  {"lambda", gen.frame.lambda},
                  {"e2_tilde", gen.frame.e2_tilde},
                  {"e3_tilde", gen.frame.e3_tilde}};
    manifest.files.push_back(write_output_file(c.output.directory,
                                               "steady_state.json", j.dump(2) + "\n"));
  } else {
    CsvBuilder csv(c.output.precision);
    csv.comment(std::string(kSchemaTag) + " steady-state");
    csv.header({"Omega", "R", "power_W", "Qc_dot", "Eh_dot", "Qh_dot",
                "work_in_dot", "net_power", "net_efficiency", "inversion",
                "first_law_residual", "min_eig", "positivity_ok"});
    const NetOutput net = net_power_and_efficiency(rep);
    csv.begin_row();
    csv.add(omega_rabi);
    csv.add(rep.rates.R);
    csv.add(rep.power_W);
    csv.add(rep.Qc_dot);
    csv.add(rep.Eh_dot);
    csv.add(rep.Qh_dot);
    csv.add(rep.work_in_dot);
    csv.add(net.net_power);
    csv.add(net.net_efficiency.value_or(std::numeric_limits<double>::quiet_NaN()));
    csv.add(inversion_ratio(rep.rho).value_or(std::numeric_limits<double>::quiet_NaN()));
    csv.add(rep.first_law_residual);
    csv.add(rep.min_eigenvalue);
    csv.add(rep.positivity_ok);
    csv.end_row();
    manifest.files.push_back(
        write_output_file(c.output.directory, "steady_state.csv", csv.str()));
  }
  return kExitOk;
}

int run_gain_curve(const RunConfig& c, ExecPolicy policy, RunManifest& manifest,
                   ResidualStats& stats) {
  const GainCurve curve =
      build_gain_curve(c.model.engine, c.model.cold, c.model.hot, c.gain, policy);
  const double gamma = c.model.engine.gamma;
  const double m_count = static_cast<double>(c.model.engine.M);

  if (curve.domain_clipped) {
    std::ostringstream msg;
    msg << "gain grid clipped to the occupation domain: N_max "
        << curve.n_max_requested << " -> " << curve.n_max_used;
    manifest.warnings.push_back(msg.str());
  }
  for (std::size_t k = 0; k < curve.failed.size(); ++k) {
    std::ostringstream msg;
    msg << "gain point N = " << curve.N[curve.failed[k]] << ": " << curve.errors[k];
    manifest.failures.push_back(msg.str());
  }
  for (const auto& d : curve.discontinuities) {
    std::ostringstream msg;
    msg << "gain discontinuity between N = " << d.N_lo << " and " << d.N_hi
        << " (R " << d.R_lo << " -> " << d.R_hi << ")";
    manifest.warnings.push_back(msg.str());
  }

  auto row_values = [&](std::size_t i) {
    json row;
    row["N"] = curve.N[i];
    row["Omega"] = rabi_from_population(c.model.engine.g_c, curve.N[i]);
    row["R"] = curve.R[i];
    row["M_R"] = m_count * curve.R[i];
    row["loss"] = gamma * curve.N[i];
    if (curve.report_ok[i]) {
      const SteadyStateReport& rep = curve.reports[i];
      row["power_W"] = rep.power_W;
      row["Qc_dot"] = rep.Qc_dot;
      row["Eh_dot"] = rep.Eh_dot;
      row["first_law_residual"] = rep.first_law_residual;
      row["min_eig"] = rep.min_eigenvalue;
    }
    return row;
  };

  if (c.output.format == OutputFormat::Json) {
    json j;
    j["points"] = json::array();
    for (std::size_t i = 0; i < curve.N.size(); ++i) j["points"].push_back(row_values(i));
    j["discontinuities"] = json::array();
    for (const auto& d : curve.discontinuities)
      j["discontinuities"].push_back({{"N_lo", d.N_lo},
                                      {"N_hi", d.N_hi},
                                      {"R_lo", d.R_lo},
                                      {"R_hi", d.R_hi},
                                      {"rising", d.rising}});
    j["n_max_used"] = curve.n_max_used;
    j["domain_clipped"] = curve.domain_clipped;
    manifest.files.push_back(
        write_output_file(c.output.directory, "gain_curve.json", j.dump(2) + "\n"));
  } else {
    CsvBuilder csv(c.output.precision);
    csv.comment(std::string(kSchemaTag) + " gain-curve");
    csv.header({"N", "Omega", "R", "M_R", "loss", "power_W", "Qc_dot", "Eh_dot",
                "first_law_residual", "min_eig", "ok"});
    for (std::size_t i = 0; i < curve.N.size(); ++i) {
      const bool ok = curve.report_ok[i] || curve.N[i] == 0.0;
      csv.begin_row();
      csv.add(curve.N[i]);
      csv.add(rabi_from_population(c.model.engine.g_c, curve.N[i]));
      csv.add(curve.R[i]);
      csv.add(m_count * curve.R[i]);
      csv.add(gamma * curve.N[i]);
      if (curve.report_ok[i]) {
        const SteadyStateReport& rep = curve.reports[i];
        csv.add(rep.power_W);
        csv.add(rep.Qc_dot);
        csv.add(rep.Eh_dot);
        csv.add(rep.first_law_residual);
        csv.add(rep.min_eigenvalue);
      } else {
        for (int k = 0; k < 5; ++k) csv.add(std::numeric_limits<double>::quiet_NaN());
      }
      csv.add(ok);
      csv.end_row();
    }
    manifest.files.push_back(
        write_output_file(c.output.directory, "gain_curve.csv", csv.str()));
  }

  for (std::size_t i = 0; i < curve.N.size(); ++i)
    if (curve.report_ok[i]) stats.add(curve.reports[i]);
  return curve.failed.empty() ? kExitOk : kExitPartial;
}

int run_solve_condensate(const RunConfig& c, ExecPolicy policy, RunManifest& manifest,
                         ResidualStats& stats) {
  const CondensateSolution sol = solve_condensate(
      c.model.engine, c.model.cold, c.model.hot, c.condensate, policy);

  if (sol.curve.domain_clipped) {
    std::ostringstream msg;
    msg << "search grid clipped to the occupation domain: N_max "
        << sol.curve.n_max_requested << " -> " << sol.curve.n_max_used;
    manifest.warnings.push_back(msg.str());
  }

  json j;
  j["threshold_exceeded"] = sol.threshold_exceeded;
  j["linear_slope"] = sol.linear_slope;
  j["transition_order_hint"] =
      sol.transition_order_hint == TransitionHint::FirstOrderSuspected
          ? "first-order-suspected"
          : "continuous";
  j["n_max_used"] = sol.curve.n_max_used;
  j["domain_clipped"] = sol.curve.domain_clipped;
  j["discontinuities"] = sol.curve.discontinuities.size();
  j["roots"] = json::array();
  for (const auto& root : sol.roots) {
    json r;
    r["N_c"] = root.N_c;
    r["stable"] = root.stable;
    r["at_discontinuity"] = root.at_discontinuity;
    r["fixed_point_residual"] = root.residual;
    if (root.report_ok) r["report"] = report_to_json(root.report);
    j["roots"].push_back(r);
    if (root.report_ok) stats.add(root.report);
  }

  if (c.output.format == OutputFormat::Json) {
    manifest.files.push_back(
        write_output_file(c.output.directory, "condensate.json", j.dump(2) + "\n"));
  } else {
    CsvBuilder csv(c.output.precision);
    csv.comment(std::string(kSchemaTag) + " condensate-roots");
    csv.header({"N_c", "stable", "at_discontinuity", "fixed_point_residual", "R",
                "net_power", "net_efficiency", "inversion", "first_law_residual",
                "min_eig"});
    for (const auto& root : sol.roots) {
      csv.begin_row();
      csv.add(root.N_c);
      csv.add(root.stable);
      csv.add(root.at_discontinuity);
      csv.add(root.residual);
      if (root.report_ok) {
        const NetOutput net = net_power_and_efficiency(root.report);
        csv.add(root.report.rates.R);
        csv.add(net.net_power);
        csv.add(net.net_efficiency.value_or(std::numeric_limits<double>::quiet_NaN()));
        csv.add(inversion_ratio(root.report.rho)
                    .value_or(std::numeric_limits<double>::quiet_NaN()));
        csv.add(root.report.first_law_residual);
        csv.add(root.report.min_eigenvalue);
      } else {
        for (int k = 0; k < 6; ++k) csv.add(std::numeric_limits<double>::quiet_NaN());
      }
      csv.end_row();
    }
    manifest.files.push_back(
        write_output_file(c.output.directory, "condensate.csv", csv.str()));
    manifest.files.push_back(write_output_file(c.output.directory,
                                               "condensate_summary.json",
                                               j.dump(2) + "\n"));
  }
  return kExitOk;
}

int run_phase_diagram(const RunConfig& c, RunManifest& manifest) {
  BoundaryOptions opts;
  opts.rel_tol = c.phase.rel_tol;
  opts.solve = c.condensate;

  SweepAxis tc_axis{SweepParam::Tc, c.phase.tc_lo, c.phase.tc_hi, c.phase.tc_count,
                    false};
  const std::vector<double> tc_values = axis_values(tc_axis);

  std::vector<std::pair<std::string, Boundary>> sets;
  for (double gamma : c.phase.gammas) {
    const ModelInputs inputs = with_param(c.model, SweepParam::Gamma, gamma);
    Boundary b =
        phase_boundary_T(inputs, tc_values, c.phase.th_lo, c.phase.th_hi, opts);
    for (const auto& o : b.omitted)
      manifest.warnings.push_back("gamma = " + format_double(gamma, 6) + ": " + o);
    std::ostringstream label;
    label << "gamma=" << format_double(gamma, 6);
    sets.emplace_back(label.str(), std::move(b));
  }

  const std::string csv =
      boundary_csv(sets, "T_c", "T_h", c.model.engine, c.model.hot, tc_values,
                   false, c.output.precision);
  manifest.files.push_back(
      write_output_file(c.output.directory, "phase_boundaries.csv", csv));

  std::size_t total_points = 0;
  for (const auto& [label, b] : sets) total_points += b.points.size();
  return total_points == 0 ? kExitNumeric : kExitOk;
}

int run_map(const RunConfig& c, ExecPolicy policy, RunManifest& manifest,
            ResidualStats& stats) {
  SweepConfig sc;
  if (c.sweep) {
    sc = *c.sweep;
  } else {
    sc.axis1 = SweepAxis{SweepParam::Th, 60.0, 400.0, 64, false};
    sc.axis2 = SweepAxis{SweepParam::Mu, 984.0 * kMeV, 1000.0 * kMeV, 64, false};
  }
  if (sc.quantities.empty()) sc.quantities = default_quantities(c.command);

  const PhaseDiagram diagram =
      sweep(c.model, sc.axis1, sc.axis2, c.condensate, policy);
  collect_sweep_stats(diagram, stats, manifest);

  const std::string name =
      c.command == Command::EfficiencyMap ? "efficiency_map" : "power_map";
  if (c.output.format == OutputFormat::Json) {
    json j;
    j["points"] = diagram_json(diagram, c.model, sc.quantities);
    manifest.files.push_back(
        write_output_file(c.output.directory, name + ".json", j.dump(2) + "\n"));
  } else {
    manifest.files.push_back(write_output_file(
        c.output.directory, name + ".csv",
        diagram_csv(diagram, c.model, sc.quantities, c.output.precision, name)));
  }
  return manifest.failures.empty() ? kExitOk : kExitPartial;
}

int run_refrigerator(const RunConfig& c, ExecPolicy policy, RunManifest& manifest,
                     ResidualStats& stats) {
  if (!(c.model.hot.mu > c.model.engine.omega))
    throw ConfigError(
        "refrigerator-diagram requires mu > omega (dissipator regime)");

  const SweepAxis tx_axis{SweepParam::Th, c.fridge.tx_lo, c.fridge.tx_hi,
                          c.fridge.grid_count, false};
  const SweepAxis tph_axis{SweepParam::Tc, c.fridge.tph_lo, c.fridge.tph_hi,
                           c.fridge.grid_count, false};
  const PhaseDiagram diagram = sweep(c.model, tx_axis, tph_axis, c.condensate, policy);
  collect_sweep_stats(diagram, stats, manifest);

  const std::vector<std::string> quantities = {"N_c", "net_power", "residual"};
  // T_h plays the exciton temperature T_x; T_c the phonon temperature T_ph.
  manifest.files.push_back(write_output_file(
      c.output.directory, "refrigerator_grid.csv",
      diagram_csv(diagram, c.model, quantities, c.output.precision,
                  "refrigerator-grid (T_h = T_x, T_c = T_ph)")));

  BoundaryOptions opts;
  opts.rel_tol = c.fridge.rel_tol;
  opts.solve = c.condensate;
  const SweepAxis scan_axis{SweepParam::Th, c.fridge.tx_lo, c.fridge.tx_hi,
                            c.fridge.tx_count, false};
  const std::vector<double> tx_values = axis_values(scan_axis);

  std::vector<std::pair<std::string, Boundary>> sets;
  for (double gamma : c.fridge.gammas) {
    const ModelInputs inputs = with_param(c.model, SweepParam::Gamma, gamma);
    Boundary b = refrigerator_boundary(inputs, tx_values, c.fridge.tph_lo,
                                       c.fridge.tph_hi, opts);
    for (const auto& o : b.omitted)
      manifest.warnings.push_back("gamma = " + format_double(gamma, 6) + ": " + o);
    std::ostringstream label;
    label << "gamma=" << format_double(gamma, 6);
    sets.emplace_back(label.str(), std::move(b));
  }
  manifest.files.push_back(write_output_file(
      c.output.directory, "refrigerator_boundaries.csv",
      boundary_csv(sets, "T_x", "T_ph", c.model.engine, c.model.hot, tx_values,
                   true, c.output.precision)));
  return manifest.failures.empty() ? kExitOk : kExitPartial;
}

} // namespace

int run(const RunConfig& config, ExecPolicy policy, std::ostream& log) {
  const auto t0 = std::chrono::steady_clock::now();
  RunManifest manifest;
  manifest.version = kVersion;
  manifest.command = to_string(config.command);
  manifest.config_echo = to_json(config);

  if (config.model.hot.mu_above_edge())
    manifest.warnings.push_back(
        "hot.mu lies at or above the step edge; occupations are only sampled "
        "above mu, but the spectral-density support below mu is unoccupied");

  ResidualStats stats;
  int code = kExitOk;
  try {
    switch (config.command) {
      case Command::SteadyState:
        code = run_steady_state(config, manifest, stats);
        break;
      case Command::GainCurve:
        code = run_gain_curve(config, policy, manifest, stats);
        break;
      case Command::SolveCondensate:
        code = run_solve_condensate(config, policy, manifest, stats);
        break;
      case Command::PhaseDiagram:
        code = run_phase_diagram(config, manifest);
        break;
      case Command::PowerMap:
      case Command::EfficiencyMap:
        code = run_map(config, policy, manifest, stats);
        break;
      case Command::RefrigeratorDiagram:
        code = run_refrigerator(config, policy, manifest, stats);
        break;
    }
  } catch (const ConfigError& e) {
    manifest.failures.push_back(e.what());
    code = kExitConfig;
  } catch (const std::exception& e) {
    manifest.failures.push_back(e.what());
    code = kExitNumeric;
  }

  manifest.exit_code = code;
  record_residuals(manifest, stats.residuals, stats.positivity_violations);
  manifest.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  try {
    write_output_file(config.output.directory, "run_manifest.json",
                      manifest.to_json().dump(2) + "\n");
  } catch (const std::exception& e) {
    log << "heng: failed to write manifest: " << e.what() << "\n";
    if (code == kExitOk) code = kExitNumeric;
  }

  for (const auto& f : manifest.failures) log << "heng: error: " << f << "\n";
  for (const auto& w : manifest.warnings) log << "heng: warning: " << w << "\n";
  return code;
}

} // namespace heng
