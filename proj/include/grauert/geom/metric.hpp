#pragma once

// Surfaces of revolution g = a(r)^2 dr^2 + sin^2 r dtheta^2 with
// a(r) = 1 + eps cos r (all geodesics closed with length 2 pi), plus the flat
// torus R^2 / (2 pi Z)^2. Chart coordinates are (r, theta), resp. (x, y).

#include <array>

namespace grauert::geom {

using Vec2 = std::array<double, 2>;

enum class MetricKind { RoundSphere, Flat, ZollRevolution };

struct SurfaceMetric {
  MetricKind kind = MetricKind::RoundSphere;
  double zoll_eps = 0.0;
  double period = 2.0 * 3.14159265358979323846;

  static SurfaceMetric round_sphere();
  static SurfaceMetric flat();
  // Requires |eps| < 1.
  static SurfaceMetric zoll(double eps);

  // Gauss curvature at a chart point.
  double curvature(const Vec2& pos) const;
  // g(v, v) at pos.
  double norm2(const Vec2& pos, const Vec2& vel) const;
  // Second derivative of the chart coordinates along a geodesic.
  Vec2 acceleration(const Vec2& pos, const Vec2& vel) const;
  // Clairaut integral sin^2 r * dtheta/dsigma (zero for Flat).
  double clairaut(const Vec2& pos, const Vec2& vel) const;

  bool is_periodic() const { return kind != MetricKind::Flat; }
};

}  // namespace grauert::geom
