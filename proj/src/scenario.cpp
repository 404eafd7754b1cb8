#include "quadgait/scenario.hpp"

#include <cmath>

#include "quadgait/errors.hpp"
#include "quadgait/transition.hpp"
#include "quadgait/wave_gait.hpp"

namespace quadgait {
namespace {

constexpr int kMaxStairCycles = 200;

class Builder {
public:
  Builder(const ScenarioSettings& s, const RobotState& start) : s_(s), state_(start), t_(s.params.t_0) {
    s_.model.validate();
    s_.params.validate();
    plan_.timeline.initial = start;
  }

  ScenarioPlan& plan() { return plan_; }
  const RobotState& state() const { return state_; }
  double time() const { return t_; }

  void add(const Timeline& part) {
    if (part.empty()) return;
    plan_.timeline.append(part);
    state_ = final_state(part);
    t_ = part.end_time();
  }

  void transition(const TransitionPlan& p) {
    add(transition_timeline(p, s_.params, state_, t_, plan_.terrain));
  }

  void wave_transition() { transition(plan_wave_transition(s_.model, s_.params)); }

  void reset_to_centres() {
    transition(search_transition(s_.model, state_.body_config(), initial_configuration(s_.model), 6));
  }

  void walk(int cycles) {
    add(plan_wave(s_.model, s_.params, state_, t_, plan_.terrain, cycles, Phase::Walk));
  }

  void stairs(bool ascending) {
    check_stroke(s_.model, s_.params, true);
    const double yaw = state_.body.yaw;
    StairProfile flight;
    flight.start = aligned_stair_start(s_.model, s_.params, state_, yaw, 0.0);
    flight.steps = s_.stair_count;
    flight.width = s_.params.stair_width;
    flight.height = s_.params.stair_height;
    flight.ascending = ascending;
    flight.axis_yaw = yaw;
    plan_.terrain.add(flight);

    const double level = plan_.terrain.height_at(state_.foot(Leg::LeftRear)) + flight.rise();
    auto landed = [&] {
      for (Leg leg : kAllLegs) {
        if (std::abs(plan_.terrain.height_at(state_.foot(leg)) - level) > kGeomTol) return false;
      }
      return true;
    };
    const Phase phase = ascending ? Phase::Ascent : Phase::Descent;
    std::vector<double>& cycles = ascending ? plan_.ascent_cycles : plan_.descent_cycles;
    for (int k = 0; !landed(); ++k) {
      if (k == kMaxStairCycles) throw InfeasibleError("stair flight never completed");
      cycles.push_back(t_);
      add(plan_wave(s_.model, s_.params, state_, t_, plan_.terrain, 1, phase));
    }
  }

  SpinSchedule spin_prepare() {
    const SpinSchedule schedule = spin_schedule(s_.model, s_.params, s_.spin_target);
    transition(plan_spin_transition(s_.model, s_.params, s_.spin_direction, schedule.geometry));
    return schedule;
  }

  void spin() { add(plan_spin(s_.model, s_.params, s_.spin_target, s_.spin_direction, state_, t_)); }

private:
  ScenarioSettings s_;
  ScenarioPlan plan_;
  RobotState state_;
  double t_;
};

}  // namespace

RobotState standing_state(const RobotModel& model, const Vec3& ground, double yaw) {
  Pose body;
  body.position = ground + Vec3(0.0, 0.0, model.body_height);
  body.yaw = yaw;
  return make_state(body, initial_configuration(model));
}

ScenarioPlan plan_case_study(const ScenarioSettings& settings) {
  Builder b(settings, standing_state(settings.model, Vec3::Zero()));
  b.wave_transition();
  b.walk(settings.level_cycles);
  b.plan().z_before_ascent = b.state().body.position.z();
  b.stairs(true);
  b.reset_to_centres();
  b.spin_prepare();
  b.spin();
  b.plan().yaw_after_spin = b.state().body.yaw;
  b.reset_to_centres();
  b.wave_transition();
  b.stairs(false);
  b.plan().z_after_descent = b.state().body.position.z();
  return b.plan();
}

ScenarioPlan plan_walk_scenario(const ScenarioSettings& settings) {
  Builder b(settings, standing_state(settings.model, Vec3::Zero()));
  b.wave_transition();
  b.walk(settings.level_cycles);
  return b.plan();
}

ScenarioPlan plan_climb_scenario(const ScenarioSettings& settings) {
  Builder b(settings, standing_state(settings.model, Vec3::Zero()));
  b.wave_transition();
  b.plan().z_before_ascent = b.state().body.position.z();
  b.stairs(true);
  return b.plan();
}

ScenarioPlan plan_descend_scenario(const ScenarioSettings& settings) {
  Builder b(settings, standing_state(settings.model, Vec3::Zero()));
  b.wave_transition();
  b.stairs(false);
  b.plan().z_after_descent = b.state().body.position.z();
  return b.plan();
}

ScenarioPlan plan_spin_scenario(const ScenarioSettings& settings) {
  Builder b(settings, standing_state(settings.model, Vec3::Zero()));
  b.spin_prepare();
  b.spin();
  b.plan().yaw_after_spin = b.state().body.yaw;
  return b.plan();
}

ScenarioPlan plan_transition_scenario(const ScenarioSettings& settings) {
  Builder b(settings, standing_state(settings.model, Vec3::Zero()));
  b.wave_transition();
  return b.plan();
}

SimTrace run_case_study(const ScenarioSettings& settings, double dt) {
  const ScenarioPlan plan = plan_case_study(settings);
  return simulate(plan.timeline, settings.model, plan.terrain, dt);
}

}  // namespace quadgait
