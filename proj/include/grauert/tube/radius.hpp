#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grauert/geom/jacobi.hpp"

namespace grauert::tube {

struct Breach {
  int geodesic_id = 0;
  double tau = 0.0;
  // "im_a_nonpositive", "pole" or "analyticity_limit".
  std::string reason;
};

struct TubeReport {
  double radius_estimate = 0.0;
  bool entire_flag = false;
  // Circle mean at the top of the scan; empty when some geodesic breached.
  std::optional<Complex> limit_value;
  std::vector<Breach> per_geodesic_breach;
};

struct ScanOptions {
  int sigma_lines = 64;
  double tau_step = 0.01;
  double jacobi_step = 1e-3;
  double bisect_tol = 1e-6;
  double pole_threshold = 1e-8;
  double oscillation_tol = 1e-4;
  bool parallel = true;
};

// a on the grid sigma_j = 2 pi j / n (rows) times tau_k (columns).
struct AGrid {
  std::vector<double> tau;
  std::vector<std::vector<Complex>> a;  // a[j][k]
};

struct Compactification {
  bool extends = false;
  Complex limit_value{};
  double oscillation = 0.0;
};

// Oscillation over sigma at the top row, Cauchy test against the previous
// row, and the circle mean as the value at the puncture.
Compactification compactification_check(const AGrid& grid, double tol = 1e-4);

struct GeodesicScan {
  int geodesic_id = 0;
  bool breached = false;
  Breach breach;
  AGrid grid;  // filled up to the breach or the ceiling
};

// Scan one closed geodesic. Directions are alpha_k = pi (k + 1/2) / n.
GeodesicScan scan_geodesic(const geom::SurfaceMetric& metric, int id, int n_geodesics,
                           double tau_ceiling, const ScanOptions& opt = {});

TubeReport tube_radius(const geom::SurfaceMetric& metric, int n_geodesics, double tau_ceiling,
                       const ScanOptions& opt = {});

}  // namespace grauert::tube
