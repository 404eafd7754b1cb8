#include "quadgait/wave_gait.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadgait/errors.hpp"
#include "quadgait/stability.hpp"

namespace quadgait {
namespace {

constexpr double kTimeEps = 1e-12;

RobotState without(const RobotState& s, Leg leg) {
  RobotState out = s;
  out.support[index(leg)] = false;
  return out;
}

void check_workspace(const RobotModel& model, const RobotState& s, double t) {
  for (Leg leg : kAllLegs) {
    if (!in_workspace(model, leg, s.foot_in_body(leg))) {
      throw InfeasibleError("workspace violation: leg " + std::to_string(number(leg)) + " at t=" + std::to_string(t));
    }
  }
}

void check_margin(const RobotState& s, double t) {
  if (stability_margin(s) < 0.0) {
    throw InfeasibleError("stability violation at t=" + std::to_string(t));
  }
}

}  // namespace

void GaitParams::validate() const {
  if (!(beta >= 0.75 && beta < 1.0)) throw std::invalid_argument("beta must lie in [3/4, 1)");
  if (!(cycle_time > 0.0)) throw std::invalid_argument("cycle_time must be positive");
  if (!(stroke > 0.0)) throw std::invalid_argument("stroke must be positive");
  if (!(delta_h > 0.0)) throw std::invalid_argument("delta_h must be positive");
  if (!(stair_width > 0.0)) throw std::invalid_argument("stair_width must be positive");
  if (!(stair_height > 0.0)) throw std::invalid_argument("stair_height must be positive");
  if (!std::isfinite(t_0)) throw std::invalid_argument("t_0 must be finite");
}

double footprint_spacing(const GaitParams& params) { return params.stroke / params.beta; }

std::pair<double, double> min_stroke(const GaitParams& params) {
  return {2.0 * params.stair_width * params.beta, 2.0 * params.stair_height * params.beta};
}

double wave_lift_phase(Leg leg) {
  for (std::size_t k = 0; k < kWaveSequence.size(); ++k) {
    if (kWaveSequence[k] == leg) return 0.25 * static_cast<double>(k);
  }
  return 0.0;
}

void check_stroke(const RobotModel& model, const GaitParams& params, bool stairs) {
  constexpr double tol = 1e-12;
  if (params.stroke > model.r_x + tol) {
    throw InfeasibleError("infeasible stroke: R = " + std::to_string(params.stroke) + " exceeds r_x = " +
                          std::to_string(model.r_x));
  }
  if (stairs) {
    const auto [horizontal, vertical] = min_stroke(params);
    if (params.stroke < horizontal - tol) {
      throw InfeasibleError("infeasible stroke: R = " + std::to_string(params.stroke) + " is below 2*W*beta = " +
                            std::to_string(horizontal));
    }
    if (model.r_z < vertical - tol) {
      throw InfeasibleError("infeasible stroke: r_z = " + std::to_string(model.r_z) + " is below 2*H*beta = " +
                            std::to_string(vertical));
    }
  }
}

FootholdConfig desired_wave_config(const RobotModel& model, const GaitParams& params) {
  check_stroke(model, params, false);
  const double lambda = footprint_spacing(params);
  FootholdConfig c;
  for (Leg leg : kAllLegs) {
    const Vec3 center = workspace_center(model, leg);
    c[leg] = Vec3(center.x() - params.stroke / 2 + lambda * wave_lift_phase(leg), center.y(), center.z());
    if (!in_workspace(model, leg, c[leg])) {
      throw InfeasibleError("desired wave configuration leaves the workspace of leg " + std::to_string(number(leg)));
    }
  }
  return c;
}

SwingPlan plan_terrain_swing(const GaitParams& params, const Terrain& terrain, const Vec3& liftoff, double heading,
                             double x_f, double drift) {
  SwingPlan plan;
  SwingSpec& spec = plan.spec;
  spec.x_f = x_f;
  spec.t_sw = params.swing_time();
  spec.delta_h = params.delta_h;
  spec.drift = drift;
  const double travel = spec.travel();
  const Vec2 dir(std::cos(heading), std::sin(heading));
  const Vec2 from = liftoff.head<2>();
  spec.z_f = terrain.height_at(Vec2(from + dir * travel)) - liftoff.z();

  const std::vector<double> edges = terrain.edges_along(from, dir, travel);
  if (edges.empty()) {
    spec.h_s = 0.0;
    spec.d_s = travel / 2;
    plan.t_s = spec.t_sw / 2;
    return plan;
  }
  // Height (relative to lift-off) of the tread after each edge.
  std::vector<double> level(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const double next = k + 1 < edges.size() ? edges[k + 1] : travel;
    level[k] = terrain.height_at(Vec2(from + dir * (0.5 * (edges[k] + next)))) - liftoff.z();
  }
  const double top = *std::max_element(level.begin(), level.end());
  if (top > 1e-12) {
    // Climb: the riser onto the highest tread governs.
    std::size_t k = 0;
    while (level[k] < top - 1e-12) ++k;
    spec.h_s = top;
    spec.d_s = edges[k];
  } else {
    // Descent: stay above the departing tread until past the last nose.
    spec.h_s = 0.0;
    spec.d_s = edges.back();
  }
  plan.t_s = solve_ts(spec);
  if (!(plan.t_s > 0.0 && plan.t_s < spec.t_sw)) {
    throw InfeasibleError("stair edge coincides with a footprint");
  }
  return plan;
}

Timeline plan_wave(const RobotModel& model, const GaitParams& params, const RobotState& start, double start_time,
                   const Terrain& terrain, int n_cycles, Phase phase) {
  params.validate();
  model.validate();
  if (n_cycles < 0) throw std::invalid_argument("n_cycles must be non-negative");
  const FootholdConfig desired = desired_wave_config(model, params);

  Timeline timeline;
  timeline.initial = start;
  if (n_cycles == 0) return timeline;

  for (Leg leg : kAllLegs) {
    const Vec3 rel = start.foot_in_body(leg);
    if ((rel.head<2>() - desired[leg].head<2>()).norm() > 1e-6) {
      throw InfeasibleError("wave gait must start from the desired configuration (leg " +
                            std::to_string(number(leg)) + ")");
    }
  }

  const double T = params.cycle_time;
  const double t_sw = params.swing_time();
  const double speed = footprint_spacing(params) / T;
  const double heading = start.body.yaw;
  const Vec3 ground_velocity(speed * std::cos(heading), speed * std::sin(heading), 0.0);

  RobotState state = start;
  double t = start_time;
  auto push = [&](Segment seg) {
    seg.phase = phase;
    timeline.segments.push_back(seg);
    const RobotState next = state_in_segment(seg, state, seg.t_end);
    if (const SwingRecord* sw = seg.swing()) {
      check_margin(without(state, sw->leg), seg.t_start);
      check_margin(without(next, sw->leg), seg.t_end);
      const RobotState mid = state_in_segment(seg, state, 0.5 * (seg.t_start + seg.t_end));
      check_workspace(model, mid, 0.5 * (seg.t_start + seg.t_end));
      const ClearanceReport clear =
          swing_clearance(sw->liftoff, sw->heading, sw->spec, sw->t_s, terrain, sw->spec.t_sw / 2000);
      if (clear.min_clearance < -kGeomTol) {
        throw InfeasibleError("clearance violation for leg " + std::to_string(number(sw->leg)) +
                              " at t=" + std::to_string(seg.t_start + clear.t_at_min));
      }
    }
    check_workspace(model, next, seg.t_end);
    state = next;
    t = seg.t_end;
  };

  for (int cycle = 0; cycle < n_cycles; ++cycle) {
    const double cycle_start = start_time + cycle * T;
    for (std::size_t k = 0; k < kWaveSequence.size(); ++k) {
      const Leg leg = kWaveSequence[k];
      const double lift = cycle_start + 0.25 * static_cast<double>(k) * T;
      if (lift - t > kTimeEps * T) {
        Segment gap;
        gap.t_start = t;
        gap.t_end = lift;
        gap.velocity = ground_velocity;
        push(gap);
      }
      const Vec3 rel = state.foot_in_body(leg);
      const Vec3 center = workspace_center(model, leg);
      SwingRecord sw;
      sw.leg = leg;
      sw.liftoff = state.foot(leg);
      sw.heading = heading;
      const SwingPlan sp =
          plan_terrain_swing(params, terrain, sw.liftoff, heading, center.x() + params.stroke / 2 - rel.x(), speed);
      sw.spec = sp.spec;
      sw.spec.y_f = center.y() - rel.y();
      sw.t_s = sp.t_s;

      Segment seg;
      seg.t_start = t;
      seg.t_end = t + t_sw;
      seg.velocity = ground_velocity;
      seg.velocity.z() = sw.spec.z_f / 4.0 / t_sw;
      seg.swings.push_back(sw);
      push(seg);
    }
    const double cycle_end = cycle_start + T;
    if (cycle_end - t > kTimeEps * T) {
      Segment gap;
      gap.t_start = t;
      gap.t_end = cycle_end;
      gap.velocity = ground_velocity;
      push(gap);
    }
  }
  return timeline;
}

Timeline plan_level_walk(const RobotModel& model, const GaitParams& params, const RobotState& start,
                         double start_time, int n_cycles) {
  return plan_wave(model, params, start, start_time, Terrain::flat(start.foot(Leg::LeftRear).z()), n_cycles,
                   Phase::Walk);
}

Timeline plan_stair_ascent(const RobotModel& model, const GaitParams& params, const Terrain& terrain,
                           const RobotState& start, double start_time, int n_cycles) {
  check_stroke(model, params, true);
  return plan_wave(model, params, start, start_time, terrain, n_cycles, Phase::Ascent);
}

Timeline plan_stair_descent(const RobotModel& model, const GaitParams& params, const Terrain& terrain,
                            const RobotState& start, double start_time, int n_cycles) {
  check_stroke(model, params, true);
  return plan_wave(model, params, start, start_time, terrain, n_cycles, Phase::Descent);
}

double aligned_stair_start(const RobotModel& model, const GaitParams& params, const RobotState& start,
                           double axis_yaw, double min_gap) {
  (void)model;
  const double W = params.stair_width;
  const double lambda = footprint_spacing(params);
  const Vec2 axis(std::cos(axis_yaw), std::sin(axis_yaw));

  double front = -std::numeric_limits<double>::infinity();
  std::vector<double> residues;
  for (Leg leg : kAllLegs) {
    const double u = axis.dot(start.foot(leg).head<2>());
    front = std::max(front, u);
    for (int k = 0; k < 16; ++k) {
      double r = std::fmod(u + k * lambda, W);
      if (r < 0) r += W;
      residues.push_back(r);
    }
  }
  std::sort(residues.begin(), residues.end());
  // Riser residue in the middle of the widest circular gap between footprints.
  double best_gap = -1.0;
  double edge = 0.0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const double a = residues[i];
    const double b = i + 1 < residues.size() ? residues[i + 1] : residues.front() + W;
    if (b - a > best_gap) {
      best_gap = b - a;
      edge = std::fmod(0.5 * (a + b), W);
    }
  }
  const double lowest = front + min_gap;
  return edge + W * std::ceil((lowest - edge) / W);
}

}  // namespace quadgait
