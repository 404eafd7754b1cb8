#include "quadgait/spin_gait.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadgait/errors.hpp"
#include "quadgait/stability.hpp"

namespace quadgait {
namespace {

constexpr double kPi = std::numbers::pi;

void fill_chord(SpinGeometry& g) {
  g.gamma = kPi / 2 - g.delta - g.phi;
  g.s_x = g.rho * (std::cos(g.delta + g.phi) - std::cos(g.delta));
  g.s_y = g.rho * (std::sin(g.delta + g.phi) - std::sin(g.delta));
}

void require_spin_beta(const GaitParams& params) {
  params.validate();
}

double wrap(double a) {
  a = std::fmod(a + kPi, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  return a - kPi;
}

}  // namespace

double SpinGeometry::arc_start(Leg leg) const {
  switch (leg) {
    case Leg::LeftFront: return delta;
    case Leg::LeftRear: return kPi - delta - phi;
    case Leg::RightRear: return kPi + delta;
    case Leg::RightFront: return 2 * kPi - delta - phi;
  }
  return delta;
}

Vec2 SpinGeometry::point(double theta) const { return Vec2(rho * std::cos(theta), rho * std::sin(theta)); }

bool spin_geometry_closed_form(const RobotModel& model, SpinGeometry& out) {
  const double px = model.p_x, py = model.p_y, ry = model.r_y;
  const double rad_lo = px * px + 2 * py * ry - ry * ry;
  const double rad_hi = px * px - 2 * py * ry - ry * ry;
  if (rad_lo < 0.0 || rad_hi < 0.0) return false;
  SpinGeometry g;
  g.rho = std::sqrt(px * px + py * py) / 2;
  g.delta = std::atan((py - ry) / std::sqrt(rad_lo));
  g.gamma = std::atan(std::sqrt(rad_hi) / (py + ry));
  g.phi = kPi / 2 - (g.delta + g.gamma);
  // Both crossings must lie on the long edges of the rectangle.
  const double x_lo = px / 2 - model.r_x / 2;
  const double x_hi = px / 2 + model.r_x / 2;
  const double xa = std::sqrt(rad_lo) / 2;
  const double xb = std::sqrt(rad_hi) / 2;
  if (xa < x_lo - kGeomTol || xa > x_hi + kGeomTol || xb < x_lo - kGeomTol || xb > x_hi + kGeomTol) return false;
  if (!(g.phi > 0.0)) return false;
  // The chord joins the crossings on the two long edges.
  g.s_x = xb - xa;
  g.s_y = ry;
  g.closed_form = true;
  out = g;
  return true;
}

SpinGeometry spin_geometry(const RobotModel& model) {
  model.validate();
  SpinGeometry g;
  if (spin_geometry_closed_form(model, g)) return g;

  g.rho = std::hypot(model.p_x, model.p_y) / 2;
  const double c0 = std::atan2(model.p_y, model.p_x);
  const double x_edges[2] = {model.p_x / 2 - model.r_x / 2, model.p_x / 2 + model.r_x / 2};
  const double y_edges[2] = {model.p_y / 2 - model.r_y / 2, model.p_y / 2 + model.r_y / 2};
  std::vector<double> crossings;
  for (double x : x_edges) {
    if (std::abs(x) <= g.rho) {
      const double a = std::acos(x / g.rho);
      crossings.push_back(a);
      crossings.push_back(-a);
    }
  }
  for (double y : y_edges) {
    if (std::abs(y) <= g.rho) {
      const double a = std::asin(y / g.rho);
      crossings.push_back(a);
      crossings.push_back(kPi - a);
    }
  }
  double hi = std::numeric_limits<double>::infinity();
  double lo = -std::numeric_limits<double>::infinity();
  for (double a : crossings) {
    const double rel = wrap(a - c0);
    if (rel > 0.0) hi = std::min(hi, c0 + rel);
    if (rel < 0.0) lo = std::max(lo, c0 + rel);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw InfeasibleError("foot circle does not cross the workspace boundary");
  }
  g.delta = lo;
  g.phi = hi - lo;
  if (!(g.phi > 0.0 && g.phi < kPi / 2)) throw InfeasibleError("spin arc outside (0, pi/2)");
  fill_chord(g);
  return g;
}

SpinGeometry reduce_arc(const SpinGeometry& full, double phi, const RobotModel& model) {
  if (!(phi > 0.0) || phi > full.phi + 1e-12) throw std::invalid_argument("reduced arc must lie in (0, phi]");
  if (phi >= full.phi) return full;
  SpinGeometry g = full;
  g.closed_form = false;
  g.phi = phi;
  const double c0 = std::atan2(model.p_y, model.p_x);
  double lo = c0 - phi / 2;
  if (lo < full.delta) lo = full.delta;
  if (lo + phi > full.delta + full.phi) lo = full.delta + full.phi - phi;
  g.delta = lo;
  fill_chord(g);
  return g;
}

double body_rotation_swing(const GaitParams& params, const SpinGeometry& geo) {
  return (1.0 / params.beta - 1.0) * geo.phi;
}

double body_rotation_support(const GaitParams& params, const SpinGeometry& geo) {
  return (2.0 - 3.0 / (2.0 * params.beta)) * geo.phi;
}

std::array<Leg, 4> spin_sequence(SpinDirection direction) {
  if (direction == SpinDirection::Ccw) return {Leg::LeftRear, Leg::RightRear, Leg::RightFront, Leg::LeftFront};
  return {Leg::RightRear, Leg::LeftRear, Leg::LeftFront, Leg::RightFront};
}

std::array<double, 4> spin_lift_times(const GaitParams& params) {
  const double a = params.swing_time();
  const double b = (4 * params.beta - 3) * params.cycle_time / 2;
  return {0.0, a + b, 2 * a + b, 3 * a + 2 * b};
}

FootholdConfig desired_spin_config(const RobotModel& model, const GaitParams& params, SpinDirection direction,
                                   const SpinGeometry& geo) {
  require_spin_beta(params);
  const double omega = geo.phi / (params.beta * params.cycle_time);
  const auto seq = spin_sequence(direction);
  const auto lifts = spin_lift_times(params);
  FootholdConfig c;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const Leg leg = seq[k];
    const double start = geo.arc_start(leg);
    const double theta =
        direction == SpinDirection::Ccw ? start + omega * lifts[k] : start + geo.phi - omega * lifts[k];
    const Vec2 p = geo.point(theta);
    c[leg] = Vec3(p.x(), p.y(), -model.body_height);
    if (!in_workspace(model, leg, c[leg])) {
      throw InfeasibleError("desired spin configuration leaves the workspace of leg " + std::to_string(number(leg)));
    }
  }
  return c;
}

FootholdConfig desired_spin_config(const RobotModel& model, const GaitParams& params, SpinDirection direction) {
  return desired_spin_config(model, params, direction, spin_geometry(model));
}

double spin_path_margin(const SpinGeometry& geo, Leg leg, const Vec3& foot_body, SpinDirection direction) {
  const double theta = std::atan2(foot_body.y(), foot_body.x());
  const double rel = wrap(theta - geo.arc_start(leg));
  return direction == SpinDirection::Ccw ? rel : geo.phi - rel;
}

Timeline plan_spin_cycle(const RobotModel& model, const GaitParams& params, SpinDirection direction,
                         const SpinGeometry& geo, const RobotState& start, double start_time) {
  const FootholdConfig desired = desired_spin_config(model, params, direction, geo);
  for (Leg leg : kAllLegs) {
    if ((start.foot_in_body(leg).head<2>() - desired[leg].head<2>()).norm() > 1e-6) {
      throw InfeasibleError("spin cycle must start from the desired configuration (leg " +
                            std::to_string(number(leg)) + ")");
    }
  }
  const double T = params.cycle_time;
  const double a = params.swing_time();
  const double b = (4 * params.beta - 3) * T / 2;
  const double sign = direction == SpinDirection::Ccw ? 1.0 : -1.0;
  const double omega = sign * geo.phi / (params.beta * T);
  const auto seq = spin_sequence(direction);

  Timeline timeline;
  timeline.initial = start;
  RobotState state = start;
  double t = start_time;

  auto check = [&](const Segment& seg, const RobotState& from) {
    constexpr int kSamples = 20;
    for (int i = 0; i <= kSamples; ++i) {
      const double ti = seg.t_start + seg.duration() * i / kSamples;
      RobotState s = state_in_segment(seg, from, ti);
      if (const SwingRecord* sw = seg.swing()) s.support[index(sw->leg)] = false;
      if (stability_margin(s) < 0.0) throw InfeasibleError("spin stability violation at t=" + std::to_string(ti));
      for (Leg leg : kAllLegs) {
        if (!in_workspace(model, leg, s.foot_in_body(leg))) {
          throw InfeasibleError("spin workspace violation: leg " + std::to_string(number(leg)) +
                                " at t=" + std::to_string(ti));
        }
      }
    }
  };
  auto push = [&](Segment seg) {
    seg.phase = Phase::Spin;
    seg.yaw_rate = omega;
    check(seg, state);
    timeline.segments.push_back(seg);
    state = state_in_segment(seg, state, seg.t_end);
    t = seg.t_end;
  };
  auto swing = [&](Leg leg) {
    const double from = direction == SpinDirection::Ccw ? geo.arc_start(leg) : geo.arc_start(leg) + geo.phi;
    const double to = direction == SpinDirection::Ccw ? geo.arc_start(leg) + geo.phi : geo.arc_start(leg);
    const Vec2 chord = geo.point(to) - geo.point(from);
    SwingRecord sw;
    sw.leg = leg;
    sw.liftoff = state.foot(leg);
    sw.heading = state.body.yaw;
    sw.spec.x_f = chord.x();
    sw.spec.y_f = chord.y();
    sw.spec.z_f = 0.0;
    sw.spec.t_sw = a;
    sw.spec.delta_h = params.delta_h;
    sw.t_s = a / 2;
    // Snap the lift-off foot onto the arc end so rounding does not accumulate.
    const Vec3 rel = state.foot_in_body(leg);
    sw.spec.x_f += geo.point(from).x() - rel.x();
    sw.spec.y_f += geo.point(from).y() - rel.y();
    Segment seg;
    seg.t_start = t;
    seg.t_end = t + a;
    seg.swings.push_back(sw);
    push(seg);
  };
  auto support = [&]() {
    Segment seg;
    seg.t_start = t;
    seg.t_end = t + b;
    push(seg);
  };

  swing(seq[0]);
  support();
  swing(seq[1]);
  swing(seq[2]);
  support();
  swing(seq[3]);
  return timeline;
}

SpinSchedule spin_schedule(const RobotModel& model, const GaitParams& params, double target_yaw) {
  if (!(target_yaw > 0.0) || !std::isfinite(target_yaw)) throw std::invalid_argument("spin target must be positive");
  require_spin_beta(params);
  const SpinGeometry full = spin_geometry(model);
  const double per_cycle = full.phi / params.beta;
  SpinSchedule s;
  s.cycles = static_cast<int>(std::ceil(target_yaw / per_cycle - 1e-12));
  if (s.cycles < 1) s.cycles = 1;
  s.geometry = reduce_arc(full, std::min(full.phi, params.beta * target_yaw / s.cycles), model);
  return s;
}

Timeline plan_spin(const RobotModel& model, const GaitParams& params, double target_yaw, SpinDirection direction,
                   const RobotState& start, double start_time) {
  const SpinSchedule schedule = spin_schedule(model, params, target_yaw);
  Timeline timeline;
  timeline.initial = start;
  RobotState state = start;
  double t = start_time;
  for (int k = 0; k < schedule.cycles; ++k) {
    const Timeline cycle = plan_spin_cycle(model, params, direction, schedule.geometry, state, t);
    timeline.append(cycle);
    state = final_state(cycle);
    t = cycle.end_time();
  }
  return timeline;
}

}  // namespace quadgait
