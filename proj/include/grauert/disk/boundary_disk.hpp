#pragma once

#include <vector>

#include "grauert/disk/model.hpp"

namespace grauert::disk {

// Holomorphic disk zeta -> (f_1, ..., f_{n-1}, f_n) stored by its modes 0..n_modes.
struct BoundaryDisk {
  std::vector<CVector> fourier;  // fourier[c][k], c = 0..n-1 (last is f_n)
  CVector z_prime;
  Complex lambda{0.0};
  int n_modes = 64;

  int dim() const { return static_cast<int>(fourier.size()); }
  CVector eval(Complex zeta) const;
  CVector derivative(Complex zeta) const;
  CVector second_derivative(Complex zeta) const;
  // Samples of component c on the uniform grid of size m.
  CVector boundary(int c, std::size_t m) const;
  Complex fn_derivative_at_zero() const { return fourier.back()[1]; }
};

// Default boundary grid size for a disk with n modes.
std::size_t grid_size(int n_modes);

// The model disk (z', zeta / h^{1/2}(z', 0)) with lambda taken from the model.
BoundaryDisk model_disk(const HermitianModel& model, const CVector& z_prime, int n_modes = 64);

// max |r(f) - 1| on the boundary grid.
double boundary_residual(const HermitianModel& model, const BoundaryDisk& f, std::size_t m = 0);

// Rotate zeta so that f_n'(0) becomes real and positive.
BoundaryDisk normalize_rotation(const BoundaryDisk& f);

// f_n winds once around 0 and the boundary curve has no self-intersection
// on the grid (nonadjacent samples stay apart, the derivative never vanishes).
bool is_embedded(const BoundaryDisk& f, std::size_t m = 0);

}  // namespace grauert::disk
