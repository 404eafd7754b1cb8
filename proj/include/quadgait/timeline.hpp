#pragma once

#include <string_view>
#include <vector>

#include "quadgait/model.hpp"
#include "quadgait/swing.hpp"

namespace quadgait {

/// What a segment belongs to; used for labelling traces.
enum class Phase { Transition, Walk, Ascent, Descent, Spin };
std::string_view phase_name(Phase phase);

struct SwingRecord {
  Leg leg{Leg::LeftRear};
  SwingSpec spec;
  double t_s{0.0};      ///< apex time of the vertical profile
  Vec3 liftoff{Vec3::Zero()};  ///< ground frame
  double heading{0.0};  ///< ground yaw of the swing's progress axis (used for clearance)
};

/// Constant body twist over [t_start, t_end] with at most one swinging leg.
struct Segment {
  double t_start{0.0};
  double t_end{0.0};
  Vec3 velocity{Vec3::Zero()};  ///< ground frame, m/s
  double yaw_rate{0.0};         ///< rad/s
  std::vector<SwingRecord> swings;
  Phase phase{Phase::Walk};

  double duration() const { return t_end - t_start; }
  const SwingRecord* swing() const { return swings.empty() ? nullptr : &swings.front(); }
};

struct Timeline {
  RobotState initial;
  std::vector<Segment> segments;

  bool empty() const { return segments.empty(); }
  double start_time() const;
  double end_time() const;

  /// Throws MalformedTimelineError: non-contiguous or negative segments, more
  /// than one swing per segment, swing duration mismatch, swinging a leg
  /// that is not in contact at lift-off.
  void validate() const;

  /// Appends `next`, which must start where this timeline ends.
  void append(const Timeline& next);
};

/// Kinematic state inside `seg` at absolute time `t`, given the state at the
/// segment start. The swinging foot is in contact only at the segment ends.
RobotState state_in_segment(const Segment& seg, const RobotState& at_start, double t);

/// State at the end of every segment, replayed from `timeline.initial`.
std::vector<RobotState> segment_end_states(const Timeline& timeline);
RobotState final_state(const Timeline& timeline);

}  // namespace quadgait
