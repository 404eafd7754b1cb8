#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quadgait/model.hpp"
#include "quadgait/terrain.hpp"
#include "quadgait/timeline.hpp"

namespace quadgait {

enum class EventKind {
  SegmentStart,
  Lift,
  Touchdown,
  StabilityViolation,
  WorkspaceViolation,
  ClearanceViolation,
  SlipViolation,
  ContactViolation,
  Warning,
};

std::string_view event_name(EventKind kind);
bool is_violation(EventKind kind);

struct SimEvent {
  double t{0.0};
  EventKind kind{EventKind::SegmentStart};
  int leg{0};  ///< leg number, 0 when not leg specific
  std::string detail;
};

struct SimSample {
  double t{0.0};
  RobotState state;
  double margin{0.0};
  Phase phase{Phase::Walk};
  int segment{-1};  ///< -1 for the initial sample of an empty timeline
};

struct SimTrace {
  double dt{0.0};
  std::vector<SimSample> samples;
  std::vector<SimEvent> events;

  std::size_t violation_count() const;
  bool has_violations() const { return violation_count() > 0; }
  double min_margin() const;
};

/// Replays `timeline` on the grid start + k*dt with every segment boundary
/// inserted (grid points within 1e-9 s of a boundary are merged into it).
/// Physical violations are logged as events. Throws MalformedTimelineError
/// for broken timelines and std::invalid_argument for dt <= 0.
SimTrace simulate(const Timeline& timeline, const RobotModel& model, const Terrain& terrain, double dt);

std::vector<std::pair<double, double>> margin_trace(const SimTrace& trace);

}  // namespace quadgait
