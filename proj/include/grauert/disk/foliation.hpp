#pragma once

// Extremal disks H(z', lambda) over a base grid, the map
// Psi_lambda(z', t) = f(h^{1/2}(z', 0) t; z', lambda) and the potential u_lambda,
// which equals -log |zeta|^2 on the leaf through z' at parameter zeta.

#include <map>
#include <memory>
#include <mutex>

#include "grauert/disk/newton.hpp"
#include "grauert/flow/exhaustion.hpp"

namespace grauert::disk {

struct FoliationOptions {
  int n_modes = 64;
  double lambda_step = 0.01;
  // Step of the fourth-order differences in z'.
  double fd_step = 1e-3;
  bool parallel = true;
  NewtonOptions newton = [] {
    NewtonOptions o;
    o.grad_tol = 5e-15;
    return o;
  }();
};

// Leaf coordinates of a point: the base point z' of its leaf and the disk parameter.
struct LeafPoint {
  CVector z_prime;
  Complex zeta{};
};

// Derivatives of u_lambda at a point, in the chart coordinates (z', t).
struct PotentialJet {
  double u = 0.0;
  CVector du;                 // du/dz_i
  Eigen::MatrixXcd ddbar;     // d^2u/dz_i dzbar_j
  CVector point;              // the chart point
  CVector leaf_tangent;       // f'(zeta)
};

// Thread-safe cache of extremal disks at one lambda.
class ExtremalFamily {
 public:
  ExtremalFamily(HermitianModel model, FoliationOptions opt = {});

  const HermitianModel& model() const { return model_; }
  const FoliationOptions& options() const { return opt_; }

  NewtonResult solve(const CVector& z_prime);
  // Seeds the cache with a known extremal disk (e.g. from a stored chart).
  void insert(const NewtonResult& r);
  BoundaryDisk disk(const CVector& z_prime) { return solve(z_prime).disk; }

  CVector psi(const CVector& z_prime, Complex t);
  CVector leaf_point(const LeafPoint& x);

  // Newton inversion of (z', zeta) -> f(zeta; z'). Starts from the lambda = 0
  // inverse unless a guess is given.
  LeafPoint invert(const CVector& p, const LeafPoint* guess = nullptr, double tol = 1e-12);

  PotentialJet jet(const LeafPoint& x);
  PotentialJet jet_at(const CVector& p);

  std::size_t cache_size() const;

 private:
  // Real Jacobian of (z', zeta) -> f and its second derivatives.
  struct MapDerivatives;
  MapDerivatives derivatives(const LeafPoint& x, bool second);

  HermitianModel model_;
  FoliationOptions opt_;
  mutable std::mutex mutex_;
  std::map<std::vector<std::pair<double, double>>, NewtonResult> cache_;
};

// Exhaustion tau = e^{u_lambda} backed by the family (for the flow module).
flow::LineBundleModel line_bundle_model(std::shared_ptr<ExtremalFamily> family);

struct FoliationReports {
  double max_grad_norm = 0.0;
  double max_boundary_residual = 0.0;
  // |u_lambda| at boundary samples, evaluated through the inversion.
  double max_u_boundary = 0.0;
  double max_r_boundary = 0.0;
  // sup |Psi_lambda(z', t) - (z', t)| over |h^{1/2} t| <= 1 samples.
  double psi_deviation = 0.0;
  double min_leaf_separation = 0.0;
  bool injective = true;
  double max_tail_energy = 0.0;
};

struct FoliationChart {
  HermitianModel model;
  int n_modes = 64;
  std::vector<CVector> grid;
  std::vector<BoundaryDisk> disks;
  RVector E, grad_norm, residual;
  FoliationReports reports;
};

// Energy of the top quarter of the stored modes, summed over components.
double tail_energy(const BoundaryDisk& f);

// The 3 x 3 base grid {-0.25, 0, 0.25} + i {-0.25, 0, 0.25} (first base coordinate).
std::vector<CVector> default_grid(int base_dim = 1);

FoliationChart assemble_foliation(ExtremalFamily& family, const std::vector<CVector>& grid);

}  // namespace grauert::disk
