#include "quadgait/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "quadgait/errors.hpp"

namespace quadgait {

Leg leg_from_number(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("leg number must be in 1..4, got " + std::to_string(n));
  }
  return static_cast<Leg>(n);
}

std::string_view leg_name(Leg leg) {
  switch (leg) {
    case Leg::LeftRear: return "left-rear";
    case Leg::RightRear: return "right-rear";
    case Leg::RightFront: return "right-front";
    case Leg::LeftFront: return "left-front";
  }
  return "?";
}

void RobotModel::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(name) + " must be a positive length");
    }
  };
  positive(p_x, "p_x");
  positive(p_y, "p_y");
  positive(r_x, "r_x");
  positive(r_y, "r_y");
  positive(r_z, "r_z");
  positive(body_height, "body_height");
  if (!(r_y < p_y)) throw std::invalid_argument("r_y must be smaller than p_y (lateral workspace overlap)");
  if (!(r_x < p_x)) throw std::invalid_argument("r_x must be smaller than p_x (longitudinal workspace overlap)");
}

bool Box::contains(const Vec3& p, double tol) const { return excess(p) <= tol; }

double Box::excess(const Vec3& p) const {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    worst = std::max({worst, lo[k] - p[k], p[k] - hi[k]});
  }
  return worst;
}

Vec3 workspace_center(const RobotModel& model, Leg leg) {
  const double x = is_front(leg) ? model.p_x / 2 : -model.p_x / 2;
  const double y = is_left(leg) ? model.p_y / 2 : -model.p_y / 2;
  return {x, y, -model.body_height};
}

Box workspace_box(const RobotModel& model, Leg leg) {
  const Vec3 c = workspace_center(model, leg);
  const Vec3 half(model.r_x / 2, model.r_y / 2, model.r_z / 2);
  return {c - half, c + half};
}

Vec2 rotate(const Vec2& v, double yaw) {
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

Vec3 body_to_world(const Pose& pose, const Vec3& p_body) {
  const Vec2 xy = rotate(p_body.head<2>(), pose.yaw);
  return pose.position + Vec3(xy.x(), xy.y(), p_body.z());
}

Vec3 world_to_body(const Pose& pose, const Vec3& p_world) {
  const Vec3 d = p_world - pose.position;
  const Vec2 xy = rotate(d.head<2>(), -pose.yaw);
  return {xy.x(), xy.y(), d.z()};
}

double FootholdConfig::distance(const FootholdConfig& other) const {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, (feet[i] - other.feet[i]).norm());
  return worst;
}

int RobotState::support_count() const {
  return static_cast<int>(std::count(support.begin(), support.end(), true));
}

FootholdConfig RobotState::body_config() const {
  FootholdConfig c;
  for (Leg leg : kAllLegs) c[leg] = foot_in_body(leg);
  return c;
}

FootholdConfig initial_configuration(const RobotModel& model) {
  FootholdConfig c;
  for (Leg leg : kAllLegs) c[leg] = workspace_center(model, leg);
  return c;
}

RobotState make_state(const Pose& body, const FootholdConfig& config) {
  RobotState s;
  s.body = body;
  for (Leg leg : kAllLegs) s.foot(leg) = body_to_world(body, config[leg]);
  return s;
}

bool in_workspace(const RobotModel& model, Leg leg, const Vec3& foot_body, double tol) {
  return workspace_box(model, leg).contains(foot_body, tol);
}

double kinematic_margin(const RobotModel& model, Leg leg, const Vec3& foot_body, const Vec3& direction) {
  const Box box = workspace_box(model, leg);
  if (box.excess(foot_body) > kGeomTol) {
    throw InfeasibleStateError("foot of leg " + std::to_string(number(leg)) + " lies outside its workspace");
  }
  const double n = direction.norm();
  if (!(n > 0.0)) throw std::invalid_argument("kinematic_margin: zero direction");
  const Vec3 u = direction / n;
  // Slab method: distance to the exit face along u.
  double reach = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    if (u[k] > 0.0) {
      reach = std::min(reach, (box.hi[k] - foot_body[k]) / u[k]);
    } else if (u[k] < 0.0) {
      reach = std::min(reach, (box.lo[k] - foot_body[k]) / u[k]);
    }
  }
  return std::max(0.0, reach);
}

double kinematic_margin(const RobotModel& model, const RobotState& state, Leg leg, const Vec3& direction) {
  return kinematic_margin(model, leg, state.foot_in_body(leg), direction);
}

}  // namespace quadgait
