#include "quadgait/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadgait/errors.hpp"

namespace quadgait {
namespace {

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double segment_distance(const Vec2& a, const Vec2& b, const Vec2& p) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (a + t * ab - p).norm();
}

double snap(double m) { return std::abs(m) <= kGeomTol ? 0.0 : m; }

}  // namespace

SupportPolygon convex_hull(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) { return (a - b).norm() <= kGeomTol; }),
            pts.end());
  if (pts.size() <= 1) return {pts};

  // Andrew's monotone chain; `<= eps` drops collinear points.
  constexpr double eps = 1e-15;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Vec2& p = pts[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return {hull};
}

SupportPolygon support_polygon(const RobotState& state) {
  std::vector<Vec2> pts;
  for (Leg leg : kAllLegs) {
    if (state.supporting(leg)) pts.push_back(state.foot(leg).head<2>());
  }
  if (pts.empty()) throw NoSupportError("no supporting foot");
  return convex_hull(pts);
}

double stability_margin(const SupportPolygon& poly, const Vec2& com_xy) {
  const auto& v = poly.vertices;
  if (v.empty()) return -std::numeric_limits<double>::infinity();
  if (v.size() == 1) return snap(-(v[0] - com_xy).norm());
  if (v.size() == 2) return snap(-segment_distance(v[0], v[1], com_xy));

  bool inside = true;
  double inner = std::numeric_limits<double>::infinity();
  double outer = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    const double side = cross(a, b, com_xy) / (b - a).norm();  // >0 on the interior side
    if (side < 0.0) inside = false;
    inner = std::min(inner, side);
    outer = std::min(outer, segment_distance(a, b, com_xy));
  }
  return snap(inside ? inner : -outer);
}

double stability_margin(const RobotState& state) {
  return stability_margin(support_polygon(state), state.body.position.head<2>());
}

}  // namespace quadgait
