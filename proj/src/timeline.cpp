#include "quadgait/timeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quadgait/errors.hpp"

namespace quadgait {

namespace {
constexpr double kTimeTol = 1e-9;
}

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::Transition: return "transition";
    case Phase::Walk: return "walk";
    case Phase::Ascent: return "ascent";
    case Phase::Descent: return "descent";
    case Phase::Spin: return "spin";
  }
  return "?";
}

double Timeline::start_time() const { return segments.empty() ? 0.0 : segments.front().t_start; }

double Timeline::end_time() const { return segments.empty() ? 0.0 : segments.back().t_end; }

void Timeline::validate() const {
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const Segment& seg = segments[k];
    const std::string where = "segment " + std::to_string(k);
    if (!std::isfinite(seg.t_start) || !std::isfinite(seg.t_end) || seg.t_end < seg.t_start) {
      throw MalformedTimelineError(where + ": negative or non-finite duration");
    }
    if (k > 0 && std::abs(segments[k - 1].t_end - seg.t_start) > kTimeTol) {
      throw MalformedTimelineError(where + ": not contiguous with its predecessor");
    }
    if (seg.swings.size() > 1) {
      throw MalformedTimelineError(where + ": more than one leg in swing");
    }
    if (const SwingRecord* sw = seg.swing()) {
      if (seg.duration() <= 0.0) throw MalformedTimelineError(where + ": zero-length swing");
      if (std::abs(sw->spec.t_sw - seg.duration()) > kTimeTol) {
        throw MalformedTimelineError(where + ": swing time differs from segment duration");
      }
      if (!(sw->t_s > 0.0 && sw->t_s < sw->spec.t_sw)) {
        throw MalformedTimelineError(where + ": apex time outside the swing");
      }
    }
  }
}

void Timeline::append(const Timeline& next) {
  if (next.segments.empty()) return;
  if (!segments.empty() && std::abs(next.start_time() - end_time()) > kTimeTol) {
    throw MalformedTimelineError("appended timeline does not start where the current one ends");
  }
  if (segments.empty()) initial = next.initial;
  segments.insert(segments.end(), next.segments.begin(), next.segments.end());
}

RobotState state_in_segment(const Segment& seg, const RobotState& at_start, double t) {
  const double tau = std::clamp(t - seg.t_start, 0.0, seg.duration());
  RobotState s = at_start;
  s.body.position = at_start.body.position + seg.velocity * tau;
  s.body.yaw = at_start.body.yaw + seg.yaw_rate * tau;
  s.support = {true, true, true, true};
  if (const SwingRecord* sw = seg.swing()) {
    const Vec3 rel0 = world_to_body(at_start.body, at_start.foot(sw->leg));
    const double u = std::min(tau, sw->spec.t_sw);
    const double dx = swing_x(u, sw->spec);
    const double dy = swing_y_kinematics(u, sw->spec).pos;
    const Vec2 rel(rel0.x() + dx, rel0.y() + dy);
    const Vec2 xy = s.body.position.head<2>() + rotate(rel, s.body.yaw);
    const double z = at_start.foot(sw->leg).z() + swing_z(u, sw->t_s, sw->spec);
    s.foot(sw->leg) = Vec3(xy.x(), xy.y(), z);
    s.support[index(sw->leg)] = !(tau > 0.0 && tau < seg.duration());
  }
  return s;
}

std::vector<RobotState> segment_end_states(const Timeline& timeline) {
  std::vector<RobotState> out;
  out.reserve(timeline.segments.size());
  RobotState s = timeline.initial;
  for (const Segment& seg : timeline.segments) {
    s = state_in_segment(seg, s, seg.t_end);
    out.push_back(s);
  }
  return out;
}

RobotState final_state(const Timeline& timeline) {
  auto ends = segment_end_states(timeline);
  return ends.empty() ? timeline.initial : ends.back();
}

}  // namespace quadgait
