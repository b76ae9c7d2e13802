#pragma once

#include <Eigen/Core>

#include "grauert/disk/energy.hpp"

namespace grauert::disk {

struct NewtonOptions {
  double grad_tol = 1e-12;
  // Accepted when backtracking stalls at round-off.
  double accept_tol = 1e-10;
  int max_iter = 100;
  int max_backtrack = 30;
  BoundarySolveOptions boundary;
};

struct NewtonResult {
  BoundaryDisk disk;
  double energy = 0.0;
  double grad_norm = 0.0;
  double residual = 0.0;
  int iterations = 0;
  RVector grad_history;
  RVector v;  // boundary warm start of the final solve
};

// Base variation carried by a disk (modes 1..n_modes of f_l).
BaseVariation variation_of(const BoundaryDisk& f);

// Preconditioned gradient iteration x <- x - alpha P^{-1} grad E(x) with the
// fixed P = -2 h_{z zbar}(0) and backtracking on |grad E|. The model lambda is
// used as is. Throws ConvergenceFailure, or Error when the result is not embedded.
NewtonResult newton_disk(const HermitianModel& model, const CVector& z_prime, int n_modes,
                         const BoundaryDisk* f_init = nullptr, const NewtonOptions& opt = {});

// Steps lambda from 0 to model.lambda in increments of `step` (along the ray),
// starting from the closed-form disk at lambda = 0.
NewtonResult continue_disk(const HermitianModel& model, const CVector& z_prime, int n_modes,
                           double step = 0.01, const NewtonOptions& opt = {});

// Finite-difference Jacobian of grad E at f_0 (z' = 0, lambda = 0) on the real
// basis {zeta^k, i zeta^k}, k = 1..k_max, for each base component.
Eigen::MatrixXd second_variation_check(const HermitianModel& model, int k_max = 4,
                                       int n_modes = 64, double eps = 1e-4);

}  // namespace grauert::disk
