#pragma once

// Levi form and beta-tangency checks of u_lambda on an extremal family.

#include "grauert/disk/foliation.hpp"

namespace grauert::disk {

struct LeviSample {
  CVector point;
  double det = 0.0;         // det of [[0, dbar u], [du, u_{i jbar}]]
  double det_t2 = 0.0;      // det |t|^2
  double restricted_min = 0.0;  // smallest eigenvalue on ker du
  double leaf_eig = 0.0;    // Levi form on the unit leaf tangent
};

struct LeviReport {
  std::vector<LeviSample> samples;
  int sign = 0;             // common sign of det, 0 if it changes
  double min_abs_det_t2 = 0.0;
  double max_abs_det_t2 = 0.0;
  double ratio = 0.0;       // max / min of |det| |t|^2
  double min_restricted = 0.0;
  double max_leaf_eig = 0.0;
  bool constant_sign = false;
  bool restricted_positive = false;
  bool passes(double max_ratio = 2.0, double leaf_tol = 1e-8) const;
};

LeviSample levi_sample(ExtremalFamily& family, const CVector& point);
LeviReport levi_verify(ExtremalFamily& family, const std::vector<CVector>& points);

// Sample points (z', t) over a base grid.
std::vector<CVector> levi_points(const std::vector<CVector>& grid);

struct TangencyReport {
  double residual = 0.0;               // sup |beta / c + zeta du|
  double negative_mode_energy = 0.0;   // of r_l / rho on the leaf
};

// beta = g dt + zeta sum g_l dz_l from the leaf's boundary data, compared with
// -zeta du_lambda at interior leaf points. The scale c is fixed pointwise by
// the extremal leaf tangent through the same point.
TangencyReport tangency_verify(ExtremalFamily& family, const BoundaryDisk& leaf);

}  // namespace grauert::disk
