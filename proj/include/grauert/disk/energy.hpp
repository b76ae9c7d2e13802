#pragma once

#include "grauert/disk/boundary_solve.hpp"

namespace grauert::disk {

// E(f) = Re f_n'(0).
double distortion_energy(const BoundaryDisk& f);

// R(f) = v_f(0) for v_f = f^* u_0 + log |zeta|^2, by the closed form
// -log h(z', 0) - 2 log |f_n'(0)|.
double robin_formula(const HermitianModel& model, const BoundaryDisk& f);

// The same constant from circle means of v_f at radii 0.1 / 2^j,
// Richardson-extrapolated in s^2.
double robin_extrapolated(const HermitianModel& model, const BoundaryDisk& f, int levels = 5,
                          std::size_t samples = 64);

// Real pairing <a, b> = (1/4 pi) int Re(a conj b) dtheta summed over components.
double pairing(const BaseVariation& a, const BaseVariation& b);
double variation_norm(const BaseVariation& a);

// -2 sec(theta0) S_0(conj(r_l / rho)) truncated to modes 1..n_modes-1.
BaseVariation grad_energy(const HermitianModel& model, const BoundaryDisk& f);

// Energy of the negative modes of r_l / rho, summed over l.
double negative_mode_energy(const HermitianModel& model, const BoundaryDisk& f);

}  // namespace grauert::disk
