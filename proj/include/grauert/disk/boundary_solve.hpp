#pragma once

#include <vector>

#include "grauert/disk/boundary_disk.hpp"
#include "grauert/disk/rh.hpp"

namespace grauert::disk {

// Variation of the base components: per component, modes 0..n_modes with
// mode 0 equal to zero (f_l(0) = z'_l is fixed).
using BaseVariation = std::vector<CVector>;

BaseVariation zero_variation(int base_dim, int n_modes);

// Boundary samples of a disk and of the model derivatives along it.
struct BoundaryData {
  std::size_t m = 0;
  std::vector<CVector> f;       // f[c][j]
  std::vector<CVector> r_base;  // r_l(f)[j]
  CVector r_t;
  RHFactorization rh;
};

BoundaryData boundary_data(const HermitianModel& model, const BoundaryDisk& f, std::size_t m = 0);

struct TangentResult {
  CVector delta_fn;  // modes 0..n_modes
  double linearized_residual = 0.0;
};

// delta f_n = zeta q / g with Re q = -(1/rho) Re sum r_l delta f_l and
// Im q(0) fixed so that delta f_n'(0) is real.
TangentResult tangent_delta_fn(const HermitianModel& model, const BoundaryDisk& f,
                               const BaseVariation& delta_base);

struct BoundarySolveOptions {
  double tol = 1e-14;
  double newton_tol = 1e-13;
  int max_iter = 200;
};

struct BoundarySolution {
  BoundaryDisk disk;
  // w in f_n = zeta (1 + w), modes 0..n_modes-1 (w(0) real).
  CVector w;
  RVector v;  // Im w on the grid, reusable as a warm start
  int iterations = 0;
  double residual = 0.0;
  double contraction = 0.0;
  // Energy of the top quarter of the computed w modes.
  double tail_energy = 0.0;
};

// Solves r(z' + delta f, zeta (1 + u + i v), lambda) = 1 on the circle by
// v <- T(G(v)) with G a pointwise Newton solve for u.
BoundarySolution solve_boundary(const HermitianModel& model, const CVector& z_prime,
                                const BaseVariation& delta_base, int n_modes,
                                const BoundarySolveOptions& opt = {},
                                const RVector* v_init = nullptr);

}  // namespace grauert::disk
