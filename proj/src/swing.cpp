#include "quadgait/swing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "quadgait/errors.hpp"

namespace quadgait {
namespace {

double checked_time(double t, double t_sw) {
  const double slack = 1e-12 * std::max(1.0, t_sw);
  if (!(t >= -slack && t <= t_sw + slack)) {
    throw std::out_of_range("swing time outside [0, T_sw]");
  }
  return std::clamp(t, 0.0, t_sw);
}

Kinematics scaled(double amplitude, double t, double duration) {
  const Kinematics s = quintic_shape(t / duration);
  return {amplitude * s.pos, amplitude * s.vel / duration, amplitude * s.acc / (duration * duration)};
}

}  // namespace

Kinematics quintic_shape(double u) {
  const double u2 = u * u;
  const double u3 = u2 * u;
  return {u3 * (10.0 - 15.0 * u + 6.0 * u2), 30.0 * u2 * (1.0 - 2.0 * u + u2), 60.0 * u * (1.0 - 3.0 * u + 2.0 * u2)};
}

Kinematics swing_x_kinematics(double t, const SwingSpec& spec) {
  return scaled(spec.x_f, checked_time(t, spec.t_sw), spec.t_sw);
}

double swing_x(double t, const SwingSpec& spec) { return swing_x_kinematics(t, spec).pos; }

Kinematics swing_y_kinematics(double t, const SwingSpec& spec) {
  return scaled(spec.y_f, checked_time(t, spec.t_sw), spec.t_sw);
}

double swing_progress(double t, const SwingSpec& spec) { return spec.drift * t + swing_x(t, spec); }

double solve_ts(const SwingSpec& spec) {
  if (spec.x_f < 0.0 || spec.drift < 0.0 || !(spec.travel() > 0.0)) {
    throw std::invalid_argument("solve_ts requires increasing horizontal progress");
  }
  const double total = spec.travel();
  const double tol = 1e-12 * std::max(total, 1.0);
  if (spec.d_s < 0.0 || spec.d_s > total + tol) {
    throw InfeasibleError("clearance abscissa d_s lies outside the swing travel");
  }
  if (spec.d_s <= 0.0) return 0.0;
  if (spec.d_s >= total) return spec.t_sw;

  auto residual = [&](double t) { return swing_progress(t, spec) - spec.d_s; };
  double lo = 0.0;
  double hi = spec.t_sw;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * spec.t_sw; ++i) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  // Newton polish kept inside the bracket.
  for (int i = 0; i < 4; ++i) {
    const double slope = spec.drift + swing_x_kinematics(t, spec).vel;
    if (!(slope > 0.0)) break;
    const double next = t - residual(t) / slope;
    if (next < lo || next > hi) break;
    if (std::abs(residual(next)) >= std::abs(residual(t))) break;
    t = next;
  }
  return t;
}

Kinematics swing_z_kinematics(double t, double t_s, const SwingSpec& spec) {
  t = checked_time(t, spec.t_sw);
  if (!(t_s > 0.0 && t_s < spec.t_sw)) throw std::out_of_range("t_s must lie strictly inside (0, T_sw)");
  const double apex = spec.apex();
  if (t <= t_s) return scaled(apex, t, t_s);
  Kinematics k = scaled(spec.z_f - apex, t - t_s, spec.t_sw - t_s);
  k.pos += apex;
  return k;
}

double swing_z(double t, double t_s, const SwingSpec& spec) { return swing_z_kinematics(t, t_s, spec).pos; }

SwingSample sample_swing(double t, double t_s, const SwingSpec& spec) {
  const Kinematics x = swing_x_kinematics(t, spec);
  const Kinematics y = swing_y_kinematics(t, spec);
  const Kinematics z = swing_z_kinematics(t, t_s, spec);
  SwingSample s;
  s.t = t;
  s.position = {spec.drift * t + x.pos, y.pos, z.pos};
  s.velocity = {spec.drift + x.vel, y.vel, z.vel};
  s.acceleration = {x.acc, y.acc, z.acc};
  return s;
}

ClearanceReport swing_clearance(const Vec3& liftoff, double heading, const SwingSpec& spec, double t_s,
                                const Terrain& terrain, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("swing_clearance: dt must be positive");
  ClearanceReport report{std::numeric_limits<double>::infinity(), 0.0, std::numeric_limits<double>::infinity()};
  const auto n = static_cast<long>(std::ceil(spec.t_sw / dt - 1e-9));
  for (long k = 0; k <= n; ++k) {
    const double t = k == n ? spec.t_sw : std::min(k * dt, spec.t_sw);
    const Vec3 rel = sample_swing(t, t_s, spec).position;
    const Vec2 xy = liftoff.head<2>() + rotate(rel.head<2>(), heading);
    const double clearance = liftoff.z() + rel.z() - terrain.height_at(xy);
    if (clearance < report.min_clearance) {
      report.min_clearance = clearance;
      report.t_at_min = t;
    }
    if (k > 0 && k < n) report.min_interior = std::min(report.min_interior, clearance);
  }
  return report;
}

}  // namespace quadgait
