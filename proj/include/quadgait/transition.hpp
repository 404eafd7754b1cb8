#pragma once

#include <vector>

#include "quadgait/gait_params.hpp"
#include "quadgait/model.hpp"
#include "quadgait/spin_gait.hpp"
#include "quadgait/terrain.hpp"
#include "quadgait/timeline.hpp"

namespace quadgait {

/// Relocates one foot to `target` (body frame) while the body stands still.
struct TransitionMove {
  Leg leg{Leg::LeftRear};
  Vec3 target{Vec3::Zero()};
};

struct TransitionPlan {
  FootholdConfig start;
  FootholdConfig goal;
  std::vector<TransitionMove> moves;

  std::vector<int> leg_order() const;
  /// Configuration after every move has been applied.
  FootholdConfig apply() const;
};

/// Margin of the body centre over the three feet that stay down while `lifted` moves.
double support_margin(const FootholdConfig& config, Leg lifted);

/// Minimum margin over all moves; +infinity for an empty plan.
double verify_transition(const TransitionPlan& plan, const RobotModel& model);

/// Fixed order 2, 3, 4, 1, 3 from the initial configuration to the desired
/// wave configuration. The first move of leg 3 stops half way to its goal.
/// Throws InfeasibleError when a step leaves a workspace or loses stability.
TransitionPlan plan_wave_transition(const RobotModel& model, const GaitParams& params);

/// Searched plan from the initial configuration to the desired spin
/// configuration. The clockwise plan mirrors the counter-clockwise one.
TransitionPlan plan_spin_transition(const RobotModel& model, const GaitParams& params, SpinDirection direction);
TransitionPlan plan_spin_transition(const RobotModel& model, const GaitParams& params, SpinDirection direction,
                                    const SpinGeometry& geo);

/// Iterative-deepening search over single-leg moves whose targets are the
/// leg's goal, its workspace centre, or its goal or start mirrored through
/// the centre. Returns the shortest stable plan; ties
/// go to the larger worst-step margin, then to the lexicographically first
/// leg sequence. Throws InfeasibleError when nothing is found within max_moves.
TransitionPlan search_transition(const RobotModel& model, const FootholdConfig& start, const FootholdConfig& goal,
                                 int max_moves = 6);

/// Timed plan: each move is a flat swing of (1 - beta) T with apex delta_h
/// and a stationary body.
Timeline transition_timeline(const TransitionPlan& plan, const GaitParams& params, const RobotState& start,
                             double start_time, const Terrain& terrain);

}  // namespace quadgait
