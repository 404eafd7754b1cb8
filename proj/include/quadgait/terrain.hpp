#pragma once

#include <vector>

#include "quadgait/model.hpp"

namespace quadgait {

/// A straight flight of stairs. Abscissae are measured along the flight axis
/// (world direction `axis_yaw`); the first riser sits at `start`. Each tread
/// is `width` deep and one `height` above (ascending) or below (descending)
/// the previous one; the last tread continues as a landing.
struct StairProfile {
  double start{0.0};
  int steps{1};
  double width{0.5};
  double height{0.13};
  bool ascending{true};
  double axis_yaw{0.0};

  /// Throws std::invalid_argument on W <= 0, H <= 0 or steps < 1.
  void validate() const;
  Vec2 axis() const;
  /// Signed height offset contributed at abscissa `u`.
  double height_along(double u) const;
  double height_at(const Vec2& xy) const { return height_along(axis().dot(xy)); }
  /// Total height change across the flight (+/- steps*height).
  double rise() const { return (ascending ? 1.0 : -1.0) * steps * height; }
};

/// Flat ground plus any number of stair flights whose contributions add up.
class Terrain {
public:
  Terrain() = default;
  explicit Terrain(std::vector<StairProfile> flights, double base = 0.0);

  static Terrain flat(double base = 0.0) { return Terrain({}, base); }

  double height_at(const Vec2& xy) const;
  double height_at(const Vec3& p) const { return height_at(Vec2(p.head<2>())); }

  /// Distances s in (0, length) along `from + s*dir` at which the height
  /// changes, ascending and de-duplicated. `dir` must be a unit vector.
  std::vector<double> edges_along(const Vec2& from, const Vec2& dir, double length) const;

  const std::vector<StairProfile>& flights() const { return flights_; }
  void add(const StairProfile& flight);
  double base() const { return base_; }

private:
  std::vector<StairProfile> flights_;
  double base_{0.0};
};

}  // namespace quadgait
