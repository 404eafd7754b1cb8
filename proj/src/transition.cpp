#include "quadgait/transition.hpp"

#include <limits>
#include <string>

#include "quadgait/errors.hpp"
#include "quadgait/stability.hpp"
#include "quadgait/wave_gait.hpp"

namespace quadgait {
namespace {

constexpr double kSameTol = 1e-12;

bool same(const Vec3& a, const Vec3& b, double tol) { return (a - b).norm() <= tol; }

void require_feasible(const TransitionPlan& plan, const RobotModel& model, const char* what) {
  for (const TransitionMove& m : plan.moves) {
    if (!in_workspace(model, m.leg, m.target)) {
      throw InfeasibleError(std::string(what) + ": target of leg " + std::to_string(number(m.leg)) +
                            " leaves its workspace");
    }
  }
  if (verify_transition(plan, model) < 0.0) throw InfeasibleError(std::string(what) + ": unstable step");
}

struct Search {
  Search(const RobotModel& m, const FootholdConfig& g) : model(m), goal(g) {}

  const RobotModel& model;
  const FootholdConfig& goal;
  std::array<std::array<Vec3, 4>, 4> targets{};
  std::vector<TransitionMove> path;
  std::vector<TransitionMove> best;
  double best_margin{-std::numeric_limits<double>::infinity()};
  bool found{false};

  void run(FootholdConfig& config, int depth, double worst) {
    if (depth == 0) {
      if (config.distance(goal) <= kGeomTol && (!found || worst > best_margin)) {
        found = true;
        best = path;
        best_margin = worst;
      }
      return;
    }
    for (Leg leg : kAllLegs) {
      if (!path.empty() && path.back().leg == leg) continue;
      const auto& options = targets[index(leg)];
      for (std::size_t i = 0; i < options.size(); ++i) {
        const Vec3& target = options[i];
        if (same(config[leg], target, kSameTol)) continue;
        bool repeated = false;
        for (std::size_t j = 0; j < i; ++j) repeated = repeated || same(target, options[j], kSameTol);
        if (repeated) continue;
        const double m = support_margin(config, leg);
        if (m < 0.0) continue;
        const Vec3 saved = config[leg];
        config[leg] = target;
        path.push_back({leg, target});
        run(config, depth - 1, std::min(worst, m));
        path.pop_back();
        config[leg] = saved;
      }
    }
  }
};

}  // namespace

std::vector<int> TransitionPlan::leg_order() const {
  std::vector<int> out;
  out.reserve(moves.size());
  for (const TransitionMove& m : moves) out.push_back(number(m.leg));
  return out;
}

FootholdConfig TransitionPlan::apply() const {
  FootholdConfig c = start;
  for (const TransitionMove& m : moves) c[m.leg] = m.target;
  return c;
}

double support_margin(const FootholdConfig& config, Leg lifted) {
  std::vector<Vec2> pts;
  for (Leg leg : kAllLegs) {
    if (leg != lifted) pts.push_back(config[leg].head<2>());
  }
  return stability_margin(convex_hull(pts), Vec2::Zero());
}

double verify_transition(const TransitionPlan& plan, const RobotModel& model) {
  (void)model;
  double worst = std::numeric_limits<double>::infinity();
  FootholdConfig c = plan.start;
  for (const TransitionMove& m : plan.moves) {
    worst = std::min(worst, support_margin(c, m.leg));
    c[m.leg] = m.target;
  }
  return worst;
}

TransitionPlan plan_wave_transition(const RobotModel& model, const GaitParams& params) {
  TransitionPlan plan;
  plan.start = initial_configuration(model);
  plan.goal = desired_wave_config(model, params);
  const Vec3 mid = 0.5 * (plan.start[Leg::RightFront] + plan.goal[Leg::RightFront]);
  const TransitionMove verbatim[] = {
      {Leg::RightRear, plan.goal[Leg::RightRear]}, {Leg::RightFront, mid},
      {Leg::LeftFront, plan.goal[Leg::LeftFront]}, {Leg::LeftRear, plan.goal[Leg::LeftRear]},
      {Leg::RightFront, plan.goal[Leg::RightFront]},
  };
  FootholdConfig c = plan.start;
  for (const TransitionMove& m : verbatim) {
    if (same(c[m.leg], m.target, kSameTol)) continue;
    plan.moves.push_back(m);
    c[m.leg] = m.target;
  }
  require_feasible(plan, model, "wave transition");
  return plan;
}

TransitionPlan plan_spin_transition(const RobotModel& model, const GaitParams& params, SpinDirection direction,
                                    const SpinGeometry& geo) {
  const FootholdConfig start = initial_configuration(model);
  TransitionPlan plan = search_transition(model, start, desired_spin_config(model, params, SpinDirection::Ccw, geo), 6);
  if (direction == SpinDirection::Cw) {
    // The model is left/right symmetric, so the clockwise plan is the mirror image.
    plan.goal = desired_spin_config(model, params, SpinDirection::Cw, geo);
    for (TransitionMove& m : plan.moves) {
      m.leg = mirror(m.leg);
      m.target.y() = -m.target.y();
    }
    if (plan.apply().distance(plan.goal) > kGeomTol) {
      throw InfeasibleError("spin transition: mirrored plan misses the clockwise goal");
    }
  }
  require_feasible(plan, model, "spin transition");
  return plan;
}

TransitionPlan plan_spin_transition(const RobotModel& model, const GaitParams& params, SpinDirection direction) {
  return plan_spin_transition(model, params, direction, spin_geometry(model));
}

TransitionPlan search_transition(const RobotModel& model, const FootholdConfig& start, const FootholdConfig& goal,
                                 int max_moves) {
  Search search(model, goal);
  for (Leg leg : kAllLegs) {
    const Vec3 center = workspace_center(model, leg);
    search.targets[index(leg)] = {goal[leg], center, 2.0 * center - goal[leg], 2.0 * center - start[leg]};
    if (!in_workspace(model, leg, goal[leg])) {
      throw InfeasibleError("goal of leg " + std::to_string(number(leg)) + " lies outside its workspace");
    }
  }
  FootholdConfig config = start;
  for (int depth = 0; depth <= max_moves && !search.found; ++depth) {
    search.run(config, depth, std::numeric_limits<double>::infinity());
  }
  if (!search.found) {
    throw InfeasibleError("no stable transition within " + std::to_string(max_moves) + " moves");
  }
  TransitionPlan plan;
  plan.start = start;
  plan.goal = goal;
  plan.moves = search.best;
  return plan;
}

Timeline transition_timeline(const TransitionPlan& plan, const GaitParams& params, const RobotState& start,
                             double start_time, const Terrain& terrain) {
  Timeline timeline;
  timeline.initial = start;
  RobotState state = start;
  double t = start_time;
  const double t_sw = params.swing_time();
  for (const TransitionMove& m : plan.moves) {
    const Vec3 rel = state.foot_in_body(m.leg);
    SwingRecord sw;
    sw.leg = m.leg;
    sw.liftoff = state.foot(m.leg);
    sw.heading = state.body.yaw;
    sw.spec.x_f = m.target.x() - rel.x();
    sw.spec.y_f = m.target.y() - rel.y();
    sw.spec.t_sw = t_sw;
    sw.spec.delta_h = params.delta_h;
    const Vec3 touch = body_to_world(state.body, Vec3(m.target.x(), m.target.y(), 0.0));
    sw.spec.z_f = terrain.height_at(touch) - sw.liftoff.z();
    sw.t_s = t_sw / 2;
    Segment seg;
    seg.t_start = t;
    seg.t_end = t + t_sw;
    seg.phase = Phase::Transition;
    seg.swings.push_back(sw);
    timeline.segments.push_back(seg);
    state = state_in_segment(seg, state, seg.t_end);
    t = seg.t_end;
  }
  return timeline;
}

}  // namespace quadgait
