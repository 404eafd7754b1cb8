#pragma once

#include <array>

#include "quadgait/gait_params.hpp"
#include "quadgait/model.hpp"
#include "quadgait/timeline.hpp"

namespace quadgait {

enum class SpinDirection { Ccw, Cw };

/// Arc used by every foot on the circle of radius rho through the workspace
/// centres. Angles describe the left-front leg's arc [delta, delta + phi]; the
/// other legs use its reflections. gamma = pi/2 - delta - phi.
struct SpinGeometry {
  double rho{0.0};
  double delta{0.0};
  double gamma{0.0};
  double phi{0.0};
  double s_x{0.0};  ///< chord A->B, x component (left-front leg)
  double s_y{0.0};  ///< chord A->B, y component (left-front leg)
  bool closed_form{false};  ///< true when the "circle crosses both long edges" formulas applied

  /// Body-frame polar interval [lo, lo + phi] of `leg`'s arc.
  double arc_start(Leg leg) const;
  /// Body-frame point at polar angle `theta` on the foot circle.
  Vec2 point(double theta) const;
};

/// Closed forms for the case where the circle crosses both workspace edges
/// parallel to body x. Returns false when the radicands are negative or the
/// crossings fall outside the rectangle.
bool spin_geometry_closed_form(const RobotModel& model, SpinGeometry& out);

/// Maximal arc of the foot circle through the workspace centre that stays in
/// the workspace rectangle. Uses the closed forms when they apply and exact
/// circle/edge intersections otherwise. Throws InfeasibleError when the arc
/// is empty.
SpinGeometry spin_geometry(const RobotModel& model);

/// Sub-arc of `full` with angle `phi`, centred on the workspace centre as far
/// as the full arc allows; chord components are recomputed.
SpinGeometry reduce_arc(const SpinGeometry& full, double phi, const RobotModel& model);

/// Body rotation while one leg swings: (1/beta - 1) * phi.
double body_rotation_swing(const GaitParams& params, const SpinGeometry& geo);
/// Body rotation in each all-support interval: (2 - 3/(2 beta)) * phi.
double body_rotation_support(const GaitParams& params, const SpinGeometry& geo);

/// Swing order: ccw 1-2-3-4, cw 2-1-4-3 (the left/right mirror of ccw).
std::array<Leg, 4> spin_sequence(SpinDirection direction);

/// Lift-off times of the four sequence slots within one cycle (from t_0).
std::array<double, 4> spin_lift_times(const GaitParams& params);

FootholdConfig desired_spin_config(const RobotModel& model, const GaitParams& params, SpinDirection direction,
                                   const SpinGeometry& geo);
FootholdConfig desired_spin_config(const RobotModel& model, const GaitParams& params, SpinDirection direction);

/// Angle left along the foot's circular path before it hits the end of its
/// arc in the direction it drifts while supporting.
double spin_path_margin(const SpinGeometry& geo, Leg leg, const Vec3& foot_body, SpinDirection direction);

/// One six-interval cycle starting at `start` (whose feet must match the
/// desired configuration for `geo`) and at time start_time.
Timeline plan_spin_cycle(const RobotModel& model, const GaitParams& params, SpinDirection direction,
                         const SpinGeometry& geo, const RobotState& start, double start_time);

struct SpinSchedule {
  int cycles{0};
  SpinGeometry geometry;  ///< arc used by every cycle
};

/// n = ceil(target / (phi/beta)) cycles, each using the reduced arc
/// beta * target / n so the final yaw lands on the target.
SpinSchedule spin_schedule(const RobotModel& model, const GaitParams& params, double target_yaw);

Timeline plan_spin(const RobotModel& model, const GaitParams& params, double target_yaw, SpinDirection direction,
                   const RobotState& start, double start_time);

}  // namespace quadgait
