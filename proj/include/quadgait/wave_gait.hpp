#pragma once

#include <array>
#include <utility>

#include "quadgait/gait_params.hpp"
#include "quadgait/model.hpp"
#include "quadgait/terrain.hpp"
#include "quadgait/timeline.hpp"

namespace quadgait {

/// Distance between successive footprints of one leg: R / beta.
double footprint_spacing(const GaitParams& params);

/// Minimum stroke for a two-stairs-per-cycle climb: (2 W beta, 2 H beta).
std::pair<double, double> min_stroke(const GaitParams& params);

/// Swing order 1-4-2-3 and the matching lift phases 0, 1/4, 1/2, 3/4.
inline constexpr std::array<Leg, 4> kWaveSequence{Leg::LeftRear, Leg::LeftFront, Leg::RightRear, Leg::RightFront};
double wave_lift_phase(Leg leg);

/// Checks the stroke against the workspace and, for stair gaits, the minimum
/// stroke. Throws InfeasibleError.
void check_stroke(const RobotModel& model, const GaitParams& params, bool stairs);

/// Foot positions at the start of the wave gait: each foot reaches the rear
/// end of its stroke exactly at its scheduled lift time.
FootholdConfig desired_wave_config(const RobotModel& model, const GaitParams& params);

/// Continuous wave gait over arbitrary stepped terrain along the body heading.
/// `start` must hold the desired configuration with all feet on the terrain.
/// Body speed is lambda/T along the heading; body height follows the mean
/// foothold height (rising by z_f/4 during each swing).
Timeline plan_wave(const RobotModel& model, const GaitParams& params, const RobotState& start, double start_time,
                   const Terrain& terrain, int n_cycles, Phase phase);

Timeline plan_level_walk(const RobotModel& model, const GaitParams& params, const RobotState& start,
                         double start_time, int n_cycles);

/// Climb: validates the minimum-stroke rule and plans the wave gait over
/// `terrain` (which holds the ascending flight).
Timeline plan_stair_ascent(const RobotModel& model, const GaitParams& params, const Terrain& terrain,
                           const RobotState& start, double start_time, int n_cycles);
Timeline plan_stair_descent(const RobotModel& model, const GaitParams& params, const Terrain& terrain,
                            const RobotState& start, double start_time, int n_cycles);

/// Vertical profile chosen for a swing over `terrain`: governing riser for
/// climbs, final nose for descents, mid-swing apex on flat ground.
struct SwingPlan {
  SwingSpec spec;
  double t_s{0.0};
};
SwingPlan plan_terrain_swing(const GaitParams& params, const Terrain& terrain, const Vec3& liftoff, double heading,
                             double x_f, double drift);

/// Riser abscissa (along `axis_yaw`) that keeps future footprints of a
/// wave gait started from `start` as far from riser edges as possible, placed
/// at least `min_gap` ahead of the front-most foot.
double aligned_stair_start(const RobotModel& model, const GaitParams& params, const RobotState& start,
                           double axis_yaw, double min_gap);

}  // namespace quadgait
