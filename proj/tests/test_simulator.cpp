#include <doctest.h>

#include <cmath>
#include <map>

#include "quadgait/errors.hpp"
#include "quadgait/scenario.hpp"
#include "quadgait/simulator.hpp"
#include "quadgait/trace_io.hpp"
#include "quadgait/wave_gait.hpp"

using namespace quadgait;

namespace {

Timeline one_walk_cycle(const RobotModel& m, const GaitParams& p) {
  Pose body;
  body.position = Vec3(0, 0, m.body_height);
  return plan_level_walk(m, p, make_state(body, desired_wave_config(m, p)), 0.0, 1);
}

}  // namespace

TEST_CASE("empty timeline") {
  const RobotModel m;
  Timeline tl;
  tl.initial = standing_state(m, Vec3::Zero());
  const SimTrace tr = simulate(tl, m, Terrain::flat(), 1e-3);
  REQUIRE(tr.samples.size() == 1);
  CHECK(tr.events.empty());
  CHECK(tr.samples[0].margin > 0.0);
  CHECK(margin_trace(tr).size() == 1);
}

TEST_CASE("stationary stance has a constant margin") {
  const RobotModel m;
  Timeline tl;
  tl.initial = standing_state(m, Vec3::Zero());
  Segment hold;
  hold.t_start = 0.0;
  hold.t_end = 1.0;
  tl.segments.push_back(hold);
  const SimTrace tr = simulate(tl, m, Terrain::flat(), 1e-2);
  CHECK(tr.samples.size() == 101);
  const auto series = margin_trace(tr);
  CHECK(series.size() == tr.samples.size());
  for (const auto& [t, v] : series) CHECK(v == series.front().second);
}

TEST_CASE("one level walk cycle replays cleanly") {
  const RobotModel m;
  const GaitParams p;
  const SimTrace tr = simulate(one_walk_cycle(m, p), m, Terrain::flat(), 1e-3);
  CHECK(tr.violation_count() == 0);
  for (const SimSample& s : tr.samples) CHECK(s.margin > 0.0);
  for (std::size_t i = 1; i < tr.samples.size(); ++i) CHECK(tr.samples[i].t > tr.samples[i - 1].t);
  CHECK(tr.samples.back().t == doctest::Approx(p.cycle_time));
}

TEST_CASE("segment boundaries are sampled exactly") {
  const RobotModel m;
  const GaitParams p;
  const Timeline tl = one_walk_cycle(m, p);
  const SimTrace tr = simulate(tl, m, Terrain::flat(), 0.3);
  for (const Segment& seg : tl.segments) {
    bool hit = false;
    for (const SimSample& s : tr.samples) hit = hit || s.t == seg.t_start;
    CHECK(hit);
  }
}

TEST_CASE("events pair lifts with touchdowns") {
  const RobotModel m;
  const GaitParams p;
  const SimTrace tr = simulate(one_walk_cycle(m, p), m, Terrain::flat(), 1e-3);
  std::map<int, int> open;
  int lifts = 0;
  for (const SimEvent& e : tr.events) {
    if (e.kind == EventKind::Lift) {
      ++open[e.leg];
      ++lifts;
    }
    if (e.kind == EventKind::Touchdown) {
      CHECK(open[e.leg] > 0);
      --open[e.leg];
    }
  }
  CHECK(lifts == 4);
}

TEST_CASE("two simultaneous swings are rejected") {
  const RobotModel m;
  const GaitParams p;
  Timeline tl = one_walk_cycle(m, p);
  SwingRecord extra = *tl.segments[0].swing();
  extra.leg = Leg::RightFront;
  tl.segments[0].swings.push_back(extra);
  CHECK_THROWS_AS(simulate(tl, m, Terrain::flat(), 1e-3), MalformedTimelineError);

  Timeline gap = one_walk_cycle(m, p);
  gap.segments[1].t_start += 0.1;
  CHECK_THROWS_AS(simulate(gap, m, Terrain::flat(), 1e-3), MalformedTimelineError);
  CHECK_THROWS_AS(simulate(one_walk_cycle(m, p), m, Terrain::flat(), 0.0), std::invalid_argument);
}

TEST_CASE("violations are logged, not thrown") {
  const RobotModel m;
  Timeline tl;
  tl.initial = standing_state(m, Vec3::Zero());
  Segment drift;
  drift.t_start = 0.0;
  drift.t_end = 2.0;
  drift.velocity = Vec3(0.5, 0.0, 0.0);
  tl.segments.push_back(drift);
  const SimTrace tr = simulate(tl, m, Terrain::flat(), 1e-2);
  CHECK(tr.has_violations());
  bool stability = false, workspace = false;
  for (const SimEvent& e : tr.events) {
    stability = stability || e.kind == EventKind::StabilityViolation;
    workspace = workspace || e.kind == EventKind::WorkspaceViolation;
  }
  CHECK(stability);
  CHECK(workspace);
  CHECK(tr.min_margin() < 0.0);
}

TEST_CASE("case study") {
  const ScenarioSettings s;
  const ScenarioPlan plan = plan_case_study(s);
  const SimTrace tr = simulate(plan.timeline, s.model, plan.terrain, 1e-3);
  CHECK(tr.violation_count() == 0);
  CHECK(tr.min_margin() >= -1e-9);
  for (const SimSample& x : tr.samples) {
    if (x.margin < 1e-6) CHECK(x.phase == Phase::Transition);
    CHECK(x.state.support_count() >= 3);
  }
  CHECK(std::abs(plan.yaw_after_spin - std::numbers::pi / 2) <= 1e-6);
  CHECK(std::abs(plan.z_after_descent - plan.z_before_ascent) <= 1e-6);

  // determinism
  const SimTrace again = run_case_study(s, 1e-3);
  CHECK(format_trace_csv(tr) == format_trace_csv(again));

  // refining dt barely moves the minimum margin
  const SimTrace coarse = simulate(plan.timeline, s.model, plan.terrain, 2e-3);
  CHECK(std::abs(coarse.min_margin() - tr.min_margin()) <= 1e-3);
}
