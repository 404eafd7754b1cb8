#pragma once

#include "quadgait/model.hpp"
#include "quadgait/terrain.hpp"

namespace quadgait {

/// Swing-foot profile parameters. Horizontal displacements (x_f, y_f) are
/// relative to the body; `drift` is the body speed along the swing heading,
/// so the foot's ground-frame progress is drift*t + swing_x(t). The vertical
/// profile is in the ground frame.
struct SwingSpec {
  double x_f{0.0};
  double y_f{0.0};
  double z_f{0.0};
  double t_sw{1.0};
  double h_s{0.0};      ///< stair height to clear, relative to liftoff
  double d_s{0.0};      ///< ground distance from liftoff to the governing riser/nose
  double delta_h{0.02};
  double drift{0.0};

  double apex() const { return h_s + delta_h; }
  /// Ground-frame horizontal travel along the heading over the whole swing.
  double travel() const { return x_f + drift * t_sw; }
  /// z_f above the apex is accepted but unusual.
  bool apex_below_target() const { return z_f > apex(); }
};

struct Kinematics {
  double pos{0.0};
  double vel{0.0};
  double acc{0.0};
};

/// Rest-to-rest quintic 10u^3 - 15u^4 + 6u^5 and its derivatives w.r.t. u.
Kinematics quintic_shape(double u);

/// Horizontal profile: 6x_f t^5/T^5 - 15x_f t^4/T^4 + 10x_f t^3/T^3.
/// Throws std::out_of_range for t outside [0, t_sw].
double swing_x(double t, const SwingSpec& spec);
Kinematics swing_x_kinematics(double t, const SwingSpec& spec);
/// Lateral profile, same quintic shape with final value y_f.
Kinematics swing_y_kinematics(double t, const SwingSpec& spec);

/// Ground-frame progress drift*t + swing_x(t).
double swing_progress(double t, const SwingSpec& spec);

/// Time at which the ground-frame progress reaches d_s. With drift = 0 this
/// is the root of x(t_s) - d_s = 0. Throws InfeasibleError when d_s lies
/// beyond the travel and std::invalid_argument when the progress is not
/// increasing (x_f < 0, drift < 0 or no travel).
double solve_ts(const SwingSpec& spec);

/// Two-piece vertical profile: quintic 0 -> h_s+delta_h on [0, t_s], then
/// quintic to z_f on [t_s, t_sw]. C2 at t_s.
double swing_z(double t, double t_s, const SwingSpec& spec);
Kinematics swing_z_kinematics(double t, double t_s, const SwingSpec& spec);

struct SwingSample {
  double t{0.0};
  Vec3 position{Vec3::Zero()};  ///< (progress, lateral, vertical) from liftoff
  Vec3 velocity{Vec3::Zero()};
  Vec3 acceleration{Vec3::Zero()};
};

SwingSample sample_swing(double t, double t_s, const SwingSpec& spec);

struct ClearanceReport {
  double min_clearance{0.0};   ///< over all samples, endpoints included
  double t_at_min{0.0};
  double min_interior{0.0};    ///< over samples strictly inside (0, t_sw)
};

/// Samples the swing every `dt` (plus the exact endpoint) and reports foot
/// height above the terrain. `heading` is the ground yaw of the swing's x axis.
ClearanceReport swing_clearance(const Vec3& liftoff, double heading, const SwingSpec& spec, double t_s,
                                const Terrain& terrain, double dt);

}  // namespace quadgait
