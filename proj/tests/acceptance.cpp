// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quadgait/config.hpp"
#include "quadgait/errors.hpp"
#include "quadgait/scenario.hpp"
#include "quadgait/simulator.hpp"
#include "quadgait/spin_gait.hpp"
#include "quadgait/swing.hpp"
#include "quadgait/trace_io.hpp"
#include "quadgait/transition.hpp"
#include "quadgait/wave_gait.hpp"

using namespace quadgait;

namespace {

constexpr double kPi = std::numbers::pi;

class Criterion {
public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool report() const {
    std::printf("%s %s (%d checks", failed_ == 0 ? "PASS" : "FAIL", name_.c_str(), checks_);
    if (failed_ > 0) std::printf(", %d failed", failed_);
    std::printf(")");
    for (const auto& n : notes_) std::printf("; %s", n.c_str());
    std::printf("\n");
    for (const auto& f : failures_) std::printf("    %s\n", f.c_str());
    return failed_ == 0;
  }

private:
  std::string name_;
  int checks_{0};
  int failed_{0};
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

struct CaseStudy {
  Config config;
  ScenarioSettings settings;
  ScenarioPlan plan;
  SimTrace trace;
  double seconds{0.0};
};

CaseStudy run_table1() {
  CaseStudy cs;
  cs.config = load_config(std::filesystem::path(QUADGAIT_SOURCE_DIR) / "configs" / "table1.cfg");
  cs.settings = cs.config.scenario();
  cs.plan = plan_case_study(cs.settings);
  const auto t0 = std::chrono::steady_clock::now();
  cs.trace = run_case_study(cs.settings, cs.config.dt);
  cs.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cs;
}

/// Samples at exactly time t (segment boundaries are always sampled).
const SimSample* sample_at(const SimTrace& tr, double t) {
  auto it = std::lower_bound(tr.samples.begin(), tr.samples.end(), t,
                             [](const SimSample& s, double v) { return s.t < v; });
  if (it == tr.samples.end() || std::abs(it->t - t) > 1e-9) return nullptr;
  return &*it;
}

bool criterion1(const CaseStudy& cs) {
  Criterion c("1 case-study stability");
  c.check(cs.trace.min_margin() >= -1e-9, fmt("min margin %.3e < -1e-9", cs.trace.min_margin()));
  c.check(cs.trace.violation_count() == 0, fmt("%.0f violation events", double(cs.trace.violation_count())));
  int low = 0;
  double outside = std::numeric_limits<double>::infinity();
  for (const SimSample& s : cs.trace.samples) {
    if (s.phase != Phase::Transition) outside = std::min(outside, s.margin);
    if (s.margin < 1e-6) {
      ++low;
      c.check(s.phase == Phase::Transition, fmt("margin %.3e at t=%.6f outside a transition", s.margin, s.t));
    }
  }
  c.check(cs.seconds < 30.0, fmt("runtime %.2f s", cs.seconds));
  c.note(fmt("%.0f samples, min margin %.3e, min outside transitions %.3e", double(cs.trace.samples.size()),
             cs.trace.min_margin(), outside));
  c.note(fmt("%.0f near-zero samples, runtime %.2f s", low, cs.seconds));
  return c.report();
}

bool criterion2(const CaseStudy& cs) {
  Criterion c("2 case-study kinematics");
  const double H = cs.settings.params.stair_height;
  c.check(std::abs(cs.plan.yaw_after_spin - kPi / 2) <= 1e-6, fmt("yaw after spin %.12f", cs.plan.yaw_after_spin));
  c.check(std::abs(cs.plan.z_after_descent - cs.plan.z_before_ascent) <= 1e-6,
          fmt("z before ascent %.9f, after descent %.9f", cs.plan.z_before_ascent, cs.plan.z_after_descent));
  // a steady ascent cycle is one in which every foot climbs two treads
  const auto& cycles = cs.plan.ascent_cycles;
  const double T = cs.settings.params.cycle_time;
  int steady = 0;
  for (double t : cycles) {
    const SimSample* a = sample_at(cs.trace, t);
    const SimSample* b = sample_at(cs.trace, t + T);
    c.check(a && b, fmt("no sample at ascent cycle boundary %.3f", t));
    if (!a || !b) continue;
    bool all_climb = true;
    for (int i = 0; i < 4; ++i) all_climb = all_climb && std::abs(b->state.feet[i].z() - a->state.feet[i].z() - 2 * H) <= 1e-9;
    if (!all_climb) continue;
    ++steady;
    const double dz = b->state.body.position.z() - a->state.body.position.z();
    c.check(std::abs(dz - 2 * H) <= 1e-6, fmt("cycle at %.3f rises %.9f, expected %.9f", t, dz, 2 * H));
  }
  c.check(steady > 0, "no steady ascent cycle");
  c.note(fmt("yaw %.12f rad, z %.9f -> %.9f m", cs.plan.yaw_after_spin, cs.plan.z_before_ascent,
             cs.plan.z_after_descent));
  c.note(fmt("%.0f steady ascent cycles of %.0f", steady, double(cycles.size())));
  return c.report();
}

bool criterion3() {
  Criterion c("3 swing trajectory contracts");
  oracle::Gen g(2024);
  for (int trial = 0; trial < 100; ++trial) {
    SwingSpec s;
    s.t_sw = g.uniform(0.5, 4.0);
    s.x_f = g.uniform(0.05, 1.2);
    s.y_f = g.uniform(-0.2, 0.2);
    s.h_s = g.uniform(0.0, 0.3);
    s.delta_h = g.uniform(0.005, 0.05);
    s.z_f = g.uniform(-0.3, s.h_s);
    s.d_s = g.uniform(0.05, 0.95) * s.x_f;
    const double ts = solve_ts(s);
    const SwingSample a = sample_swing(0.0, ts, s);
    const SwingSample b = sample_swing(s.t_sw, ts, s);
    c.check(a.position.norm() <= 1e-9, "liftoff position");
    c.check((b.position - Vec3(s.x_f, s.y_f, s.z_f)).norm() <= 1e-9, "touchdown position");
    const double end_rates = std::max({a.velocity.norm(), b.velocity.norm(), a.acceleration.norm(),
                                       b.acceleration.norm()});
    c.check(end_rates <= 1e-9, fmt("endpoint velocity/acceleration %.3e", end_rates));
    c.check(std::abs(swing_z(ts, ts, s) - (s.h_s + s.delta_h)) <= 1e-9, "apex height");
    c.check(std::abs(swing_x(ts, s) - s.d_s) <= 1e-10, fmt("x(t_s) - d_s = %.3e", swing_x(ts, s) - s.d_s));
    // analytic derivatives against central differences
    const double h = 1e-5 * s.t_sw;
    for (int k = 0; k < 5; ++k) {
      const double t = g.uniform(2 * h, s.t_sw - 2 * h);
      const SwingSample m = sample_swing(t, ts, s);
      const SwingSample lo = sample_swing(t - h, ts, s), hi = sample_swing(t + h, ts, s);
      const Vec3 v_fd = (hi.position - lo.position) / (2 * h);
      const Vec3 a_fd = (hi.velocity - lo.velocity) / (2 * h);
      const double v_err = (v_fd - m.velocity).norm() / std::max(1.0, m.velocity.norm());
      const double a_err = (a_fd - m.acceleration).norm() / std::max(1.0, m.acceleration.norm());
      c.check(v_err <= 1e-5, fmt("velocity mismatch %.3e at t=%.6f", v_err, t));
      c.check(a_err <= 1e-5, fmt("acceleration mismatch %.3e at t=%.6f", a_err, t));
    }
  }
  return c.report();
}

bool criterion4(const CaseStudy& cs) {
  Criterion c("4 stair clearance");
  const auto& segs = cs.plan.timeline.segments;
  int swings = 0;
  double worst = std::numeric_limits<double>::infinity(), worst_interior = worst;
  for (const Segment& seg : segs) {
    if (seg.phase != Phase::Ascent && seg.phase != Phase::Descent) continue;
    for (const SwingRecord& sw : seg.swings) {
      ++swings;
      const ClearanceReport r = swing_clearance(sw.liftoff, sw.heading, sw.spec, sw.t_s, cs.plan.terrain, 1e-3);
      worst = std::min(worst, r.min_clearance);
      worst_interior = std::min(worst_interior, r.min_interior);
      c.check(r.min_clearance >= -1e-9, fmt("clearance %.3e at t=%.6f", r.min_clearance, seg.t_start + r.t_at_min));
      c.check(r.min_interior > 0.0, fmt("interior clearance %.3e in swing at %.3f", r.min_interior, seg.t_start));
    }
  }
  c.check(swings > 0, "no stair swings");
  c.note(fmt("%.0f swings, min %.3e, min strictly inside %.3e", swings, worst, worst_interior));
  return c.report();
}

bool criterion5(const CaseStudy& cs) {
  Criterion c("5 footprint geometry");
  const GaitParams p = cs.config.gait();
  const double lambda = footprint_spacing(p);
  c.check(std::abs(lambda - p.stroke / p.beta) <= 1e-12, "lambda");
  const double W = p.stair_width, H = p.stair_height;
  // true when `xy` lies on a tread of a flight rather than on the ground before it or the landing after it
  auto on_flight = [&](const Vec2& xy) {
    for (const StairProfile& f : cs.plan.terrain.flights()) {
      const double u = f.axis().dot(xy) - f.start;
      if (u >= 0.0 && u < f.steps * f.width) return true;
    }
    return false;
  };
  c.check(std::abs(p.stroke - 2 * W * p.beta) <= 1e-12, "stroke is 2*W*beta");

  // touchdown of every swing, in the heading frame of the body
  const auto ends = segment_end_states(cs.plan.timeline);
  struct Touchdown {
    Vec3 local;  // heading frame, world z
    bool on_flight;
  };
  std::map<std::pair<Phase, int>, std::vector<Touchdown>> touchdowns;
  const auto& segs = cs.plan.timeline.segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const SwingRecord* sw = segs[i].swing();
    if (!sw) continue;
    const Phase ph = segs[i].phase;
    if (ph != Phase::Walk && ph != Phase::Ascent && ph != Phase::Descent) continue;
    const Vec3 f = ends[i].foot(sw->leg);
    const Vec2 local = rotate(Vec2(f.x(), f.y()), -ends[i].body.yaw);
    touchdowns[{ph, int(sw->leg)}].push_back({Vec3(local.x(), local.y(), f.z()), on_flight(Vec2(f.x(), f.y()))});
  }
  int walk_pairs = 0, stair_pairs = 0;
  for (const auto& [key, pts] : touchdowns) {
    for (std::size_t k = 1; k < pts.size(); ++k) {
      const Vec3 d = pts[k].local - pts[k - 1].local;
      if (key.first == Phase::Walk) {
        ++walk_pairs;
        c.check((d - Vec3(lambda, 0, 0)).norm() <= 1e-6, fmt("walk spacing (%.9f, %.9f, %.9f)", d.x(), d.y(), d.z()));
        continue;
      }
      const double sign = key.first == Phase::Ascent ? 1.0 : -1.0;
      c.check(std::abs(d.x() - 2 * W) <= 1e-6 && std::abs(d.y()) <= 1e-6,
              fmt("stair spacing (%.9f, %.9f)", d.x(), d.y()));
      if (!pts[k - 1].on_flight || !pts[k].on_flight) continue;
      ++stair_pairs;
      c.check(std::abs(d.z() - sign * 2 * H) <= 1e-6, fmt("stair rise %.9f", d.z()));
    }
  }
  c.check(walk_pairs > 0 && stair_pairs > 0, "missing footprint pairs");
  c.note(fmt("lambda %.6f m, %.0f level pairs, %.0f stair pairs", lambda, walk_pairs, stair_pairs));
  return c.report();
}

bool criterion6() {
  Criterion c("6 spin geometry oracle");
  auto arc_of = [](const RobotModel& m, int samples) {
    return oracle::dense_arc(std::hypot(m.p_x, m.p_y) / 2, std::atan2(m.p_y, m.p_x), m.p_x / 2 - m.r_x / 2,
                             m.p_x / 2 + m.r_x / 2, m.p_y / 2 - m.r_y / 2, m.p_y / 2 + m.r_y / 2, samples);
  };
  oracle::Gen g(4242);
  int accepted = 0;
  for (int trial = 0; accepted < 100 && trial < 100000; ++trial) {
    RobotModel m;
    m.p_x = g.uniform(0.5, 1.5);
    m.p_y = g.uniform(0.3, 1.0);
    m.r_y = g.uniform(0.02, 0.95 * m.p_y);
    m.r_x = g.uniform(0.05, 0.95 * m.p_x);
    SpinGeometry geo;
    if (!spin_geometry_closed_form(m, geo)) continue;
    ++accepted;
    const oracle::Arc arc = arc_of(m, 200000);
    c.check(std::abs(geo.delta - arc.lo) <= 1e-9, fmt("delta %.12f vs %.12f", geo.delta, arc.lo));
    c.check(std::abs(geo.delta + geo.phi - arc.hi) <= 1e-9, fmt("arc end %.12f vs %.12f", geo.delta + geo.phi, arc.hi));
    c.check(std::abs(geo.gamma - (kPi / 2 - arc.hi)) <= 1e-9, "gamma");
  }
  c.check(accepted == 100, "fewer than 100 feasible models");

  RobotModel ex;
  ex.p_x = 1.0;
  ex.p_y = 0.5;
  ex.r_x = 0.6;
  ex.r_y = 0.3;
  SpinGeometry geo;
  const bool closed = spin_geometry_closed_form(ex, geo);
  c.check(closed, "example not in the closed-form case");
  const oracle::Arc arc = arc_of(ex, 1000000);
  const double phi_oracle = arc.hi - arc.lo;
  c.check(std::abs(geo.phi - phi_oracle) <= 1e-9, fmt("example phi %.9f vs oracle %.9f", geo.phi, phi_oracle));
  c.check(std::abs(geo.phi - 0.6175458) <= 5e-7, fmt("example phi %.9f", geo.phi));
  c.check(geo.s_y == ex.r_y, fmt("s_y %.17g != R_y", geo.s_y));
  c.note(fmt("example phi %.7f rad (dense oracle %.7f); the often quoted 0.61789 is %.1e away", geo.phi, phi_oracle,
             std::abs(0.61789 - phi_oracle)));
  return c.report();
}

bool criterion7() {
  Criterion c("7 spin schedule identities");
  const RobotModel m;
  for (double beta : {0.75, 0.8, 0.875, 0.95}) {
    GaitParams p;
    p.beta = beta;
    const SpinGeometry geo = spin_geometry(m);
    const double sw = body_rotation_swing(p, geo), sup = body_rotation_support(p, geo);
    c.check(std::abs(4 * sw + 2 * sup - geo.phi / beta) <= 1e-12, fmt("beta %.3f: 4dO + 2dO' off by %.3e", beta,
                                                                      4 * sw + 2 * sup - geo.phi / beta));
    for (SpinDirection dir : {SpinDirection::Ccw, SpinDirection::Cw}) {
      Pose body;
      body.position = Vec3(0, 0, m.body_height);
      const RobotState start = make_state(body, desired_spin_config(m, p, dir, geo));
      const Timeline tl = plan_spin_cycle(m, p, dir, geo, start, 0.0);
      c.check(tl.segments.size() == 6, "six intervals");
      double total = 0.0;
      const double rate = (dir == SpinDirection::Ccw ? 1.0 : -1.0) * geo.phi / (beta * p.cycle_time);
      for (std::size_t i = 0; i < tl.segments.size(); ++i) {
        const Segment& seg = tl.segments[i];
        total += seg.duration();
        c.check(std::abs(seg.yaw_rate - rate) <= 1e-12, fmt("beta %.3f: yaw rate %.15f vs %.15f", beta, seg.yaw_rate, rate));
        if (beta == 0.75 && !seg.swing()) c.check(seg.duration() == 0.0, "support interval not empty at beta 3/4");
      }
      c.check(std::abs(total - p.cycle_time) <= 1e-12, fmt("beta %.3f: durations sum to %.15f", beta, total));
    }
    if (beta == 0.75) c.check(sup == 0.0, fmt("dO' = %.3e at beta 3/4", sup));
  }
  return c.report();
}

oracle::Config to_oracle(const FootholdConfig& f) {
  oracle::Config c;
  for (Leg leg : kAllLegs) c[index(leg)] = {f[leg].x(), f[leg].y()};
  return c;
}

bool criterion8() {
  Criterion c("8 transition plans");
  const RobotModel m;
  const GaitParams p;
  const TransitionPlan wave = plan_wave_transition(m, p);
  const std::vector<int> order = wave.leg_order();
  c.check(order == std::vector<int>{2, 3, 4, 1, 3}, "wave order is not 2 3 4 1 3");
  const TransitionPlan ccw = plan_spin_transition(m, p, SpinDirection::Ccw);
  const TransitionPlan cw = plan_spin_transition(m, p, SpinDirection::Cw);
  for (const TransitionPlan* plan : {&wave, &ccw, &cw}) {
    const double worst = verify_transition(*plan, m);
    c.check(worst >= 0.0, fmt("worst step margin %.3e", worst));
    c.check(plan->apply().distance(plan->goal) <= 1e-9, "goal not reached");
  }
  c.check(wave.apply().distance(desired_wave_config(m, p)) <= 1e-9, "wave goal");
  c.check(ccw.apply().distance(desired_spin_config(m, p, SpinDirection::Ccw)) <= 1e-9, "ccw goal");
  c.check(cw.apply().distance(desired_spin_config(m, p, SpinDirection::Cw)) <= 1e-9, "cw goal");

  oracle::Gen g(77);
  int solved = 0;
  for (int trial = 0; trial < 20; ++trial) {
    FootholdConfig start, goal;
    for (Leg leg : kAllLegs) {
      const Box b = workspace_box(m, leg);
      start[leg] = Vec3(g.uniform(b.lo.x(), b.hi.x()), g.uniform(b.lo.y(), b.hi.y()), -m.body_height);
      goal[leg] = Vec3(g.uniform(b.lo.x(), b.hi.x()), g.uniform(b.lo.y(), b.hi.y()), -m.body_height);
    }
    std::array<std::vector<oracle::P2>, 4> cand;
    for (Leg leg : kAllLegs) {
      const Vec3 ctr = workspace_center(m, leg);
      const Vec3 r = 2.0 * ctr - goal[leg];
      const Vec3 s = 2.0 * ctr - start[leg];
      cand[index(leg)] = {{goal[leg].x(), goal[leg].y()}, {ctr.x(), ctr.y()}, {r.x(), r.y()}, {s.x(), s.y()}};
    }
    const auto best = oracle::enumerate_transitions(to_oracle(start), to_oracle(goal), cand, 4);
    if (!best.found) {
      bool threw = false;
      try {
        search_transition(m, start, goal, 4);
      } catch (const InfeasibleError&) {
        threw = true;
      }
      c.check(threw, "search found a plan the enumeration did not");
      continue;
    }
    ++solved;
    const TransitionPlan plan = search_transition(m, start, goal, 4);
    c.check(plan.moves.size() == best.moves.size(), "plan length differs from enumeration");
    c.check(std::abs(verify_transition(plan, m) - best.worst) <= 1e-12, "worst margin differs from enumeration");
    c.check(plan.apply().distance(goal) <= 1e-9, "random goal not reached");
  }
  c.check(solved > 0, "no random instance was solvable");
  std::ostringstream legs;
  for (const TransitionPlan* plan : {&ccw, &cw}) {
    for (int l : plan->leg_order()) legs << l;
    legs << ' ';
  }
  c.note("spin plans (ccw cw) " + legs.str() + fmt("; %.0f/20 random instances solvable", solved));
  return c.report();
}

bool criterion9(const CaseStudy& cs) {
  Criterion c("9 property suites");
  const RobotModel& m = cs.settings.model;
  const GaitParams p = cs.config.gait();

  // periodicity: body-frame feet repeat at every wave and spin cycle boundary
  Pose body;
  body.position = Vec3(0, 0, m.body_height);
  const Timeline walk = plan_level_walk(m, p, make_state(body, desired_wave_config(m, p)), 0.0, 3);
  const Timeline spin = plan_spin(m, p, kPi / 2, SpinDirection::Ccw,
                                  make_state(body, desired_spin_config(m, p, SpinDirection::Ccw,
                                                                       spin_schedule(m, p, kPi / 2).geometry)),
                                  0.0);
  for (const Timeline* tl : {&walk, &spin}) {
    const auto ends = segment_end_states(*tl);
    const FootholdConfig first = tl->initial.body_config();
    int boundaries = 0;
    for (std::size_t i = 0; i < tl->segments.size(); ++i) {
      const double since = tl->segments[i].t_end - tl->start_time();
      const double k = std::round(since / p.cycle_time);
      if (k < 1 || std::abs(since - k * p.cycle_time) > 1e-9) continue;
      if (i + 1 < tl->segments.size() && tl->segments[i + 1].duration() == 0.0) continue;
      ++boundaries;
      const double d = ends[i].body_config().distance(first);
      c.check(d <= 1e-9, fmt("configuration drifts %.3e after %.0f cycles", d, k));
    }
    c.check(boundaries >= 1, "no cycle boundary found");
  }

  // no slip and at least three feet down
  int min_support = 4;
  double worst_slip = 0.0;
  const auto& smp = cs.trace.samples;
  for (std::size_t i = 0; i < smp.size(); ++i) {
    min_support = std::min(min_support, smp[i].state.support_count());
    if (i == 0) continue;
    for (int leg = 0; leg < 4; ++leg) {
      if (!smp[i - 1].state.support[leg] || !smp[i].state.support[leg]) continue;
      worst_slip = std::max(worst_slip, (smp[i].state.feet[leg] - smp[i - 1].state.feet[leg]).norm());
    }
  }
  c.check(worst_slip <= 1e-9, fmt("supporting foot moved %.3e", worst_slip));
  c.check(min_support >= 3, fmt("%.0f supporting feet", min_support));

  // determinism
  const SimTrace again = run_case_study(cs.settings, cs.config.dt);
  c.check(format_trace_csv(again) == format_trace_csv(cs.trace), "repeated run differs");
  c.note(fmt("max slip %.3e m, min support %.0f", worst_slip, min_support));
  return c.report();
}

}  // namespace

int main() {
  bool ok = true;
  try {
    const CaseStudy cs = run_table1();
    ok = criterion1(cs) && ok;
    ok = criterion2(cs) && ok;
    ok = criterion3() && ok;
    ok = criterion4(cs) && ok;
    ok = criterion5(cs) && ok;
    ok = criterion6() && ok;
    ok = criterion7() && ok;
    ok = criterion8() && ok;
    ok = criterion9(cs) && ok;
  } catch (const std::exception& e) {
    std::printf("FAIL aborted: %s\n", e.what());
    return 1;
  }
  return ok ? 0 : 1;
}
