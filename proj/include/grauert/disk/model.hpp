#pragma once

// Hermitian models near the divisor {t = 0}: r(z', t, lambda) = h(z', lambda t) |t|^2
// in the chart (z_1..z_{n-1}, t). The boundary of the model neighbourhood is r = 1
// and u_0 = -log r is the model solution.

#include <string>

#include "grauert/common.hpp"

namespace grauert::disk {

enum class ModelKind {
  // h = 1 + sum |z_i|^2 over base coordinates; mixed Hessian +I at 0.
  plus,
  // h = exp(-sum_{i<=n} |z_i|^2 + 2 kappa Re(z_1^2 z_n)); mixed Hessian -I at 0.
  quadric,
  // h = 1.
  flat,
};

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

struct HermitianModel {
  ModelKind kind = ModelKind::quadric;
  int dim = 2;
  Complex lambda{0.0};
  double kappa = 1.0;

  int base_dim() const { return dim - 1; }

  // h and its holomorphic first derivatives at a full point (z', z_n).
  double h(const CVector& zp, Complex zn) const;
  // dh/dz_i for i = 0..dim-1 (the last one is d/dz_n).
  CVector dh(const CVector& zp, Complex zn) const;
  // d^2 h / dz_i dzbar_i at the centre for base coordinates (all equal).
  double center_mixed_hessian() const;

  double r(const CVector& zp, Complex t) const;
  // dr/dz_l for base coordinates.
  CVector r_base(const CVector& zp, Complex t) const;
  // dr/dt.
  Complex r_t(const CVector& zp, Complex t) const;

  void validate() const;
};

}  // namespace grauert::disk
