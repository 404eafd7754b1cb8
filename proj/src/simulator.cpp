#include "quadgait/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "quadgait/errors.hpp"
#include "quadgait/stability.hpp"

namespace quadgait {
namespace {

constexpr double kMergeTol = 1e-9;
constexpr double kViolationTol = 1e-9;

std::vector<double> sample_times(const Timeline& timeline, double dt) {
  std::vector<double> bounds;
  for (const Segment& seg : timeline.segments) {
    bounds.push_back(seg.t_start);
    bounds.push_back(seg.t_end);
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end(), [](double a, double b) { return b - a <= kMergeTol; }),
               bounds.end());

  const double t0 = timeline.start_time();
  const double t1 = timeline.end_time();
  std::vector<double> times;
  std::size_t b = 0;
  for (long long k = 0;; ++k) {
    const double g = t0 + static_cast<double>(k) * dt;
    if (g > t1 + kMergeTol) break;
    while (b < bounds.size() && bounds[b] < g - kMergeTol) times.push_back(bounds[b++]);
    if (b < bounds.size() && std::abs(bounds[b] - g) <= kMergeTol) {
      times.push_back(bounds[b++]);
    } else if (g <= t1) {
      times.push_back(g);
    }
  }
  while (b < bounds.size()) times.push_back(bounds[b++]);
  return times;
}

}  // namespace

std::string_view event_name(EventKind kind) {
  switch (kind) {
    case EventKind::SegmentStart: return "segment";
    case EventKind::Lift: return "lift";
    case EventKind::Touchdown: return "touchdown";
    case EventKind::StabilityViolation: return "stability";
    case EventKind::WorkspaceViolation: return "workspace";
    case EventKind::ClearanceViolation: return "clearance";
    case EventKind::SlipViolation: return "slip";
    case EventKind::ContactViolation: return "contact";
    case EventKind::Warning: return "warning";
  }
  return "?";
}

bool is_violation(EventKind kind) {
  switch (kind) {
    case EventKind::StabilityViolation:
    case EventKind::WorkspaceViolation:
    case EventKind::ClearanceViolation:
    case EventKind::SlipViolation:
    case EventKind::ContactViolation: return true;
    default: return false;
  }
}

std::size_t SimTrace::violation_count() const {
  return static_cast<std::size_t>(
      std::count_if(events.begin(), events.end(), [](const SimEvent& e) { return is_violation(e.kind); }));
}

double SimTrace::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const SimSample& s : samples) m = std::min(m, s.margin);
  return m;
}

SimTrace simulate(const Timeline& timeline, const RobotModel& model, const Terrain& terrain, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
  timeline.validate();

  SimTrace trace;
  trace.dt = dt;
  auto margin_of = [](const RobotState& s) {
    try {
      return stability_margin(s);
    } catch (const NoSupportError&) {
      return -std::numeric_limits<double>::infinity();
    }
  };

  if (timeline.empty()) {
    SimSample s;
    s.t = timeline.start_time();
    s.state = timeline.initial;
    s.margin = margin_of(s.state);
    trace.samples.push_back(s);
    return trace;
  }

  // State at the start of every segment.
  std::vector<RobotState> starts;
  starts.reserve(timeline.segments.size());
  {
    RobotState s = timeline.initial;
    for (const Segment& seg : timeline.segments) {
      if (const SwingRecord* sw = seg.swing(); sw && !s.supporting(sw->leg)) {
        throw MalformedTimelineError("swing of a leg that is not in contact");
      }
      starts.push_back(s);
      s = state_in_segment(seg, s, seg.t_end);
    }
  }

  for (std::size_t k = 0; k < timeline.segments.size(); ++k) {
    const Segment& seg = timeline.segments[k];
    trace.events.push_back({seg.t_start, EventKind::SegmentStart, 0, std::string(phase_name(seg.phase))});
    if (const SwingRecord* sw = seg.swing()) {
      const int leg = number(sw->leg);
      trace.events.push_back({seg.t_start, EventKind::Lift, leg, {}});
      if (sw->spec.apex_below_target()) {
        trace.events.push_back({seg.t_start, EventKind::Warning, leg, "swing target above the apex"});
      }
      trace.events.push_back({seg.t_end, EventKind::Touchdown, leg, {}});
    }
  }

  const std::vector<double> times = sample_times(timeline, dt);
  trace.samples.reserve(times.size());
  std::size_t k = 0;
  const std::size_t n = timeline.segments.size();
  const SimSample* prev = nullptr;
  for (double t : times) {
    while (k + 1 < n && timeline.segments[k].t_end <= t) ++k;
    const Segment& seg = timeline.segments[k];
    SimSample s;
    s.t = t;
    s.state = state_in_segment(seg, starts[k], t);
    s.margin = margin_of(s.state);
    s.phase = seg.phase;
    s.segment = static_cast<int>(k);

    if (s.margin < -kViolationTol) {
      trace.events.push_back({t, EventKind::StabilityViolation, 0, "margin " + std::to_string(s.margin)});
    }
    for (Leg leg : kAllLegs) {
      const int id = number(leg);
      const Vec3& foot = s.state.foot(leg);
      const double excess = workspace_box(model, leg).excess(s.state.foot_in_body(leg));
      if (excess > kViolationTol) {
        trace.events.push_back({t, EventKind::WorkspaceViolation, id, "excess " + std::to_string(excess)});
      }
      const double gap = foot.z() - terrain.height_at(foot);
      if (s.state.supporting(leg)) {
        if (std::abs(gap) > kViolationTol) {
          trace.events.push_back({t, EventKind::ContactViolation, id, "gap " + std::to_string(gap)});
        }
        if (prev && prev->state.supporting(leg)) {
          const double slip = (foot - prev->state.foot(leg)).norm();
          if (slip > kViolationTol) {
            trace.events.push_back({t, EventKind::SlipViolation, id, "slip " + std::to_string(slip)});
          }
        }
      } else if (gap < -kViolationTol) {
        trace.events.push_back({t, EventKind::ClearanceViolation, id, "clearance " + std::to_string(gap)});
      }
    }
    trace.samples.push_back(std::move(s));
    prev = &trace.samples.back();
  }
  std::stable_sort(trace.events.begin(), trace.events.end(),
                   [](const SimEvent& a, const SimEvent& b) { return a.t < b.t; });
  return trace;
}

std::vector<std::pair<double, double>> margin_trace(const SimTrace& trace) {
  std::vector<std::pair<double, double>> out;
  out.reserve(trace.samples.size());
  for (const SimSample& s : trace.samples) out.emplace_back(s.t, s.margin);
  return out;
}

}  // namespace quadgait
