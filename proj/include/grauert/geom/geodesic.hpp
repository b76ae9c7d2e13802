#pragma once

#include <vector>

#include "grauert/geom/metric.hpp"

namespace grauert::geom {

struct GeodesicState {
  Vec2 position{};
  Vec2 velocity{};
  double arclength = 0.0;
};

using Trajectory = std::vector<GeodesicState>;

// Fixed-step RK4. The step is shrunk so that sigma_end is hit exactly; the
// trajectory holds every step including both endpoints.
Trajectory integrate_geodesic(const SurfaceMetric& metric, const GeodesicState& init,
                              double sigma_end, double step);

// Unit-speed start on the equator r = pi/2 making angle alpha with the
// parallel. For Flat the start is the origin.
GeodesicState equatorial_start(const SurfaceMetric& metric, double alpha);

// One full period sampled with `samples` uniform steps.
Trajectory closed_geodesic(const SurfaceMetric& metric, double alpha, std::size_t samples = 65536);

// Distance between the end state and the start state, theta taken mod 2 pi.
double closure_defect(const Trajectory& traj);

}  // namespace grauert::geom
