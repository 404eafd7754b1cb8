#include "quadgait/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "quadgait/config.hpp"
#include "quadgait/errors.hpp"
#include "quadgait/scenario.hpp"
#include "quadgait/svg_plot.hpp"
#include "quadgait/trace_io.hpp"
#include "quadgait/wave_gait.hpp"

namespace quadgait {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config;
  std::vector<std::string> overrides;
  std::string csv;
  std::string out;
};

Config resolve(const Options& o) {
  if (o.config.empty()) {
    Config c = default_config();
    for (const auto& s : o.overrides) apply_override(c, s);
    validate_config(c);
    return c;
  }
  return load_config(o.config, o.overrides);
}

void print_config(const Config& c, std::ostream& out) {
  const GaitParams p = c.gait();
  const auto [w, h] = min_stroke(p);
  out << "model: p_x=" << c.model.p_x << " p_y=" << c.model.p_y << " r_x=" << c.model.r_x << " r_y=" << c.model.r_y
      << " r_z=" << c.model.r_z << " body_height=" << c.model.body_height << "\n";
  out << "gait: beta=" << p.beta << " T=" << p.cycle_time << " R=" << p.stroke << " lambda=" << footprint_spacing(p)
      << " min_stroke=(" << w << ", " << h << ")\n";
}

int run_plan(const std::string& name, const std::function<ScenarioPlan(const ScenarioSettings&)>& planner,
             const Options& o, std::ostream& out, std::ostream& err) {
  const Config cfg = resolve(o);
  const ScenarioSettings settings = cfg.scenario();
  ScenarioPlan plan;
  SimTrace trace;
  try {
    plan = planner(settings);
    trace = simulate(plan.timeline, settings.model, plan.terrain, cfg.dt);
  } catch (const GaitError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  }

  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  const fs::path csv = dir / (name + ".csv");
  write_trace_csv(trace, csv);
  const PlotFiles plots = write_plots_svg(trace, dir / name);

  const auto& last = trace.samples.back();
  out << name << ": " << trace.samples.size() << " samples, t=[" << trace.samples.front().t << ", " << last.t
      << "] s\n";
  out << "min margin: " << trace.min_margin() << " m\n";
  out << "final body: x=" << last.state.body.position.x() << " y=" << last.state.body.position.y()
      << " z=" << last.state.body.position.z() << " yaw=" << last.state.body.yaw * 180.0 / std::numbers::pi
      << " deg\n";
  out << "wrote " << csv.string() << ", " << plots.trajectories.string() << ", " << plots.margin.string() << "\n";

  const std::size_t violations = trace.violation_count();
  if (violations == 0) return kExitOk;
  err << violations << " violation(s)\n";
  std::size_t shown = 0;
  for (const SimEvent& e : trace.events) {
    if (!is_violation(e.kind)) continue;
    if (shown++ == 20) {
      err << "...\n";
      break;
    }
    err << "  t=" << e.t << " " << event_name(e.kind);
    if (e.leg) err << " leg " << e.leg;
    err << " " << e.detail << "\n";
  }
  return kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadruped gait planner and kinematic simulator", "quadgait"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, std::string> plans{
      {"scenario", "Walk, climb the stairs, spin and descend"},
      {"walk", "Level-ground wave gait"},
      {"climb", "Stair ascent"},
      {"descend", "Stair descent"},
      {"spin", "Spinning gait"},
      {"transition", "Transition to the wave gait start"},
  };
  std::map<std::string, CLI::App*> subs;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "Config file (key = value lines)");
    sub->add_option("--set", o.overrides, "Override a config key, key=value")->allow_extra_args(false);
  };
  for (const auto& [name, help] : plans) {
    subs[name] = app.add_subcommand(name, help);
    add_common(subs[name]);
  }
  CLI::App* check = app.add_subcommand("check", "Validate a config");
  add_common(check);
  CLI::App* plot = app.add_subcommand("plot", "Plot an existing trace CSV");
  plot->add_option("--csv", o.csv, "Trace CSV")->required();
  plot->add_option("--out", o.out, "Output prefix (default: CSV path without extension)");
  add_common(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (check->parsed()) {
      const Config cfg = resolve(o);
      print_config(cfg, out);
      out << "config ok\n";
      return kExitOk;
    }
    if (plot->parsed()) {
      const TraceTable table = read_trace_csv(o.csv);
      fs::path prefix = o.out.empty() ? fs::path(o.csv).replace_extension() : fs::path(o.out);
      const PlotFiles files = write_plots_svg(table, prefix);
      out << "wrote " << files.trajectories.string() << ", " << files.margin.string() << "\n";
      return kExitOk;
    }
    static const std::map<std::string, std::function<ScenarioPlan(const ScenarioSettings&)>> planners{
        {"scenario", plan_case_study},   {"walk", plan_walk_scenario}, {"climb", plan_climb_scenario},
        {"descend", plan_descend_scenario}, {"spin", plan_spin_scenario}, {"transition", plan_transition_scenario},
    };
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) return run_plan(name, planners.at(name), o, out, err);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const fs::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace quadgait
