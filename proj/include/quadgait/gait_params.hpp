#pragma once

namespace quadgait {

/// Periodic gait parameters (lengths in m, times in s).
struct GaitParams {
  double beta{0.75};        ///< duty factor
  double cycle_time{8.0};   ///< T
  double stroke{0.75};      ///< R
  double delta_h{0.02};     ///< swing clearance above obstacles
  double stair_width{0.5};  ///< W
  double stair_height{0.13};///< H
  double t_0{0.0};          ///< gait start time

  double swing_time() const { return (1.0 - beta) * cycle_time; }
  double support_time() const { return beta * cycle_time; }

  /// Throws std::invalid_argument naming the violated field. Stroke versus
  /// workspace checks are planner feasibility questions and live there.
  void validate() const;
};

}  // namespace quadgait
