#pragma once

#include <span>
#include <vector>

#include "quadgait/model.hpp"

namespace quadgait {

/// Convex hull of the supporting feet projected on the horizontal plane.
/// Vertices are counter-clockwise with collinear points removed; 1 or 2
/// vertices describe a degenerate (point or segment) hull.
struct SupportPolygon {
  std::vector<Vec2> vertices;

  std::size_t size() const { return vertices.size(); }
};

SupportPolygon convex_hull(std::span<const Vec2> points);

/// Throws NoSupportError when no foot is supporting.
SupportPolygon support_polygon(const RobotState& state);

/// Signed static stability margin of `com_xy` with respect to `poly`:
/// distance to the nearest side when inside, minus the distance to the
/// boundary when outside. Values within kGeomTol of zero are reported as 0.
double stability_margin(const SupportPolygon& poly, const Vec2& com_xy);

/// Margin of the body centre over the supporting feet of `state`.
double stability_margin(const RobotState& state);

}  // namespace quadgait
