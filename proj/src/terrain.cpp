#include "quadgait/terrain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quadgait {

void StairProfile::validate() const {
  if (!(width > 0.0)) throw std::invalid_argument("stair width must be positive");
  if (!(height > 0.0)) throw std::invalid_argument("stair height must be positive");
  if (steps < 1) throw std::invalid_argument("stair step count must be at least 1");
}

Vec2 StairProfile::axis() const { return {std::cos(axis_yaw), std::sin(axis_yaw)}; }

double StairProfile::height_along(double u) const {
  if (u < start) return 0.0;
  const double level = std::min(std::floor((u - start) / width) + 1.0, static_cast<double>(steps));
  return (ascending ? 1.0 : -1.0) * level * height;
}

Terrain::Terrain(std::vector<StairProfile> flights, double base) : flights_(std::move(flights)), base_(base) {
  for (const auto& f : flights_) f.validate();
}

void Terrain::add(const StairProfile& flight) {
  flight.validate();
  flights_.push_back(flight);
}

double Terrain::height_at(const Vec2& xy) const {
  double h = base_;
  for (const auto& f : flights_) h += f.height_at(xy);
  return h;
}

std::vector<double> Terrain::edges_along(const Vec2& from, const Vec2& dir, double length) const {
  std::vector<double> out;
  for (const auto& f : flights_) {
    const double rate = f.axis().dot(dir);
    if (std::abs(rate) < 1e-12) continue;
    const double u0 = f.axis().dot(from);
    for (int k = 0; k < f.steps; ++k) {
      const double s = (f.start + k * f.width - u0) / rate;
      if (s > 0.0 && s < length) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            out.end());
  return out;
}

}  // namespace quadgait
