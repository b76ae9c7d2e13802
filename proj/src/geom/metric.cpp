#include "grauert/geom/metric.hpp"

#include <cmath>

#include "grauert/common.hpp"

namespace grauert::geom {

SurfaceMetric SurfaceMetric::round_sphere() { return {MetricKind::RoundSphere, 0.0, kTwoPi}; }

SurfaceMetric SurfaceMetric::flat() { return {MetricKind::Flat, 0.0, kTwoPi}; }

SurfaceMetric SurfaceMetric::zoll(double eps) {
  if (!(std::abs(eps) < 1.0)) throw InvalidInput("zoll_eps must satisfy |eps| < 1");
  return {MetricKind::ZollRevolution, eps, kTwoPi};
}

double SurfaceMetric::curvature(const Vec2& pos) const {
  switch (kind) {
    case MetricKind::Flat:
      return 0.0;
    case MetricKind::RoundSphere:
      return 1.0;
    case MetricKind::ZollRevolution: {
      const double a = 1.0 + zoll_eps * std::cos(pos[0]);
      return 1.0 / (a * a * a);
    }
  }
  return 0.0;
}

double SurfaceMetric::norm2(const Vec2& pos, const Vec2& vel) const {
  if (kind == MetricKind::Flat) return vel[0] * vel[0] + vel[1] * vel[1];
  const double a = 1.0 + zoll_eps * std::cos(pos[0]);
  const double s = std::sin(pos[0]);
  return a * a * vel[0] * vel[0] + s * s * vel[1] * vel[1];
}

Vec2 SurfaceMetric::acceleration(const Vec2& pos, const Vec2& vel) const {
  if (kind == MetricKind::Flat) return {0.0, 0.0};
  const double r = pos[0];
  const double a = 1.0 + zoll_eps * std::cos(r);
  const double da = -zoll_eps * std::sin(r);
  const double s = std::sin(r), c = std::cos(r);
  const double rdd = (-a * da * vel[0] * vel[0] + s * c * vel[1] * vel[1]) / (a * a);
  const double tdd = -2.0 * (c / s) * vel[0] * vel[1];
  return {rdd, tdd};
}

double SurfaceMetric::clairaut(const Vec2& pos, const Vec2& vel) const {
  if (kind == MetricKind::Flat) return 0.0;
  const double s = std::sin(pos[0]);
  return s * s * vel[1];
}

}  // namespace grauert::geom
