#pragma once

#include <array>
#include <string_view>

#include <Eigen/Core>

namespace quadgait {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

/// Geometric tolerance used for containment and on-boundary classification (m).
inline constexpr double kGeomTol = 1e-9;

/// Leg labels. Numbering runs counter-clockwise seen from above, starting at
/// the left-rear leg, so the forward wave order is 1-4-2-3.
enum class Leg : int { LeftRear = 1, RightRear = 2, RightFront = 3, LeftFront = 4 };

inline constexpr std::array<Leg, 4> kAllLegs{Leg::LeftRear, Leg::RightRear, Leg::RightFront,
                                             Leg::LeftFront};

/// Zero-based array slot of a leg.
constexpr int index(Leg leg) { return static_cast<int>(leg) - 1; }
constexpr int number(Leg leg) { return static_cast<int>(leg); }
Leg leg_from_number(int n);
std::string_view leg_name(Leg leg);

constexpr bool is_left(Leg leg) { return leg == Leg::LeftRear || leg == Leg::LeftFront; }
constexpr bool is_front(Leg leg) { return leg == Leg::LeftFront || leg == Leg::RightFront; }

/// Left/right reflection (y -> -y) of a leg label.
constexpr Leg mirror(Leg leg) {
  switch (leg) {
    case Leg::LeftRear: return Leg::RightRear;
    case Leg::RightRear: return Leg::LeftRear;
    case Leg::RightFront: return Leg::LeftFront;
    case Leg::LeftFront: return Leg::RightFront;
  }
  return leg;
}

/// Body and workspace geometry. Body frame: x forward, y left, z up, origin at
/// the body centre, which is also the centre of mass.
struct RobotModel {
  double p_x{0.8};          ///< front-to-rear hip distance
  double p_y{0.54};         ///< left-to-right hip distance
  double r_x{0.76};         ///< workspace cube extent along body x
  double r_y{0.5};          ///< workspace cube extent along body y
  double r_z{0.8};          ///< workspace cube extent along body z
  double body_height{0.6};  ///< nominal body height above the contact plane

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

struct Box {
  Vec3 lo;
  Vec3 hi;

  bool contains(const Vec3& p, double tol = kGeomTol) const;
  /// Largest violation of the box bounds (0 when inside).
  double excess(const Vec3& p) const;
};

Vec3 workspace_center(const RobotModel& model, Leg leg);
Box workspace_box(const RobotModel& model, Leg leg);

/// Body pose in the world: position plus yaw about world z.
struct Pose {
  Vec3 position{Vec3::Zero()};
  double yaw{0.0};
};

Vec3 body_to_world(const Pose& pose, const Vec3& p_body);
Vec3 world_to_body(const Pose& pose, const Vec3& p_world);
/// Rotates a horizontal vector by `yaw`.
Vec2 rotate(const Vec2& v, double yaw);

using FootArray = std::array<Vec3, 4>;

/// Foot positions in the body frame, indexed by index(leg).
struct FootholdConfig {
  FootArray feet{};

  const Vec3& operator[](Leg leg) const { return feet[index(leg)]; }
  Vec3& operator[](Leg leg) { return feet[index(leg)]; }
  /// Largest per-foot distance to `other`.
  double distance(const FootholdConfig& other) const;
};

struct RobotState {
  Pose body;
  FootArray feet{};  ///< world frame
  std::array<bool, 4> support{true, true, true, true};

  const Vec3& foot(Leg leg) const { return feet[index(leg)]; }
  Vec3& foot(Leg leg) { return feet[index(leg)]; }
  bool supporting(Leg leg) const { return support[index(leg)]; }
  int support_count() const;
  Vec3 foot_in_body(Leg leg) const { return world_to_body(body, foot(leg)); }
  FootholdConfig body_config() const;
};

/// Every foot at the centre of its workspace.
FootholdConfig initial_configuration(const RobotModel& model);

/// Places `config` (body frame) under `body`, all feet supporting.
RobotState make_state(const Pose& body, const FootholdConfig& config);

bool in_workspace(const RobotModel& model, Leg leg, const Vec3& foot_body, double tol = kGeomTol);

/// Distance the foot can travel along `direction` (body frame, need not be
/// normalised) before leaving its workspace cube. Throws InfeasibleStateError
/// when the foot is already outside by more than kGeomTol.
double kinematic_margin(const RobotModel& model, Leg leg, const Vec3& foot_body, const Vec3& direction);
double kinematic_margin(const RobotModel& model, const RobotState& state, Leg leg, const Vec3& direction);

}  // namespace quadgait
