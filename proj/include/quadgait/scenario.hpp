#pragma once

#include <limits>
#include <numbers>
#include <vector>

#include "quadgait/gait_params.hpp"
#include "quadgait/model.hpp"
#include "quadgait/simulator.hpp"
#include "quadgait/spin_gait.hpp"
#include "quadgait/terrain.hpp"
#include "quadgait/timeline.hpp"

namespace quadgait {

struct ScenarioSettings {
  RobotModel model;
  GaitParams params;
  int stair_count{6};
  int level_cycles{2};
  double spin_target{std::numbers::pi / 2};  ///< rad
  SpinDirection spin_direction{SpinDirection::Ccw};
};

struct ScenarioPlan {
  Timeline timeline;
  Terrain terrain;
  double z_before_ascent{std::numeric_limits<double>::quiet_NaN()};
  double z_after_descent{std::numeric_limits<double>::quiet_NaN()};
  double yaw_after_spin{std::numeric_limits<double>::quiet_NaN()};
  std::vector<double> ascent_cycles;   ///< start time of every ascent cycle
  std::vector<double> descent_cycles;  ///< start time of every descent cycle
};

/// Stance at `position` with every foot at its workspace centre on flat ground.
RobotState standing_state(const RobotModel& model, const Vec3& ground, double yaw = 0.0);

/// Walk, climb, spin, descend.
ScenarioPlan plan_case_study(const ScenarioSettings& settings);
/// Wave transition followed by level_cycles of level walking.
ScenarioPlan plan_walk_scenario(const ScenarioSettings& settings);
/// Wave transition and a climb until every foot stands on the upper landing.
ScenarioPlan plan_climb_scenario(const ScenarioSettings& settings);
/// Wave transition and a descent until every foot stands on the lower landing.
ScenarioPlan plan_descend_scenario(const ScenarioSettings& settings);
/// Spin transition and a spin through spin_target.
ScenarioPlan plan_spin_scenario(const ScenarioSettings& settings);
/// Wave transition alone.
ScenarioPlan plan_transition_scenario(const ScenarioSettings& settings);

SimTrace run_case_study(const ScenarioSettings& settings, double dt);

}  // namespace quadgait
