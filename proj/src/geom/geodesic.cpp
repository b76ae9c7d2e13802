#include "grauert/geom/geodesic.hpp"

#include <cmath>

#include "grauert/common.hpp"

namespace grauert::geom {
namespace {

struct Phase {
  double r, t, vr, vt;
};

Phase rhs(const SurfaceMetric& m, const Phase& p) {
  const Vec2 acc = m.acceleration({p.r, p.t}, {p.vr, p.vt});
  return {p.vr, p.vt, acc[0], acc[1]};
}

Phase axpy(const Phase& p, double h, const Phase& k) {
  return {p.r + h * k.r, p.t + h * k.t, p.vr + h * k.vr, p.vt + h * k.vt};
}

double wrap_angle(double x) { return std::remainder(x, kTwoPi); }

}  // namespace

Trajectory integrate_geodesic(const SurfaceMetric& metric, const GeodesicState& init,
                              double sigma_end, double step) {
  if (!(step > 0.0)) throw InvalidInput("geodesic step must be positive");
  if (!(sigma_end >= 0.0)) throw InvalidInput("sigma_end must be nonnegative");
  if (std::abs(metric.norm2(init.position, init.velocity) - 1.0) > 1e-10)
    throw InvalidInput("initial velocity is not unit");

  const auto n = static_cast<std::size_t>(std::ceil(sigma_end / step - 1e-12));
  const double h = n ? sigma_end / static_cast<double>(n) : 0.0;
  Trajectory out;
  out.reserve(n + 1);
  out.push_back(init);
  Phase p{init.position[0], init.position[1], init.velocity[0], init.velocity[1]};
  for (std::size_t i = 0; i < n; ++i) {
    const Phase k1 = rhs(metric, p);
    const Phase k2 = rhs(metric, axpy(p, 0.5 * h, k1));
    const Phase k3 = rhs(metric, axpy(p, 0.5 * h, k2));
    const Phase k4 = rhs(metric, axpy(p, h, k3));
    p.r += h / 6.0 * (k1.r + 2 * k2.r + 2 * k3.r + k4.r);
    p.t += h / 6.0 * (k1.t + 2 * k2.t + 2 * k3.t + k4.t);
    p.vr += h / 6.0 * (k1.vr + 2 * k2.vr + 2 * k3.vr + k4.vr);
    p.vt += h / 6.0 * (k1.vt + 2 * k2.vt + 2 * k3.vt + k4.vt);
    out.push_back({{p.r, p.t}, {p.vr, p.vt}, init.arclength + h * static_cast<double>(i + 1)});
  }
  return out;
}

GeodesicState equatorial_start(const SurfaceMetric& metric, double alpha) {
  if (metric.kind == MetricKind::Flat) return {{0.0, 0.0}, {std::sin(alpha), std::cos(alpha)}, 0.0};
  // a(pi/2) = 1 and sin(pi/2) = 1, so the chart velocity is already unit.
  return {{kPi / 2, 0.0}, {std::sin(alpha), std::cos(alpha)}, 0.0};
}

Trajectory closed_geodesic(const SurfaceMetric& metric, double alpha, std::size_t samples) {
  if (samples == 0) throw InvalidInput("samples must be positive");
  return integrate_geodesic(metric, equatorial_start(metric, alpha), metric.period,
                            metric.period / static_cast<double>(samples));
}

double closure_defect(const Trajectory& traj) {
  const auto& a = traj.front();
  const auto& b = traj.back();
  return std::hypot(b.position[0] - a.position[0], wrap_angle(b.position[1] - a.position[1]),
                    std::hypot(b.velocity[0] - a.velocity[0], b.velocity[1] - a.velocity[1]));
}

}  // namespace grauert::geom
