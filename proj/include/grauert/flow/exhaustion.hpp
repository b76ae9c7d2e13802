#pragma once

// Plurisubharmonic exhaustions tau and their complex gradient
// Y = tau^{i jbar} tau_jbar d/dz^i.

#include <Eigen/Dense>
#include <functional>

#include "grauert/common.hpp"

namespace grauert::flow {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

class ExhaustionModel {
 public:
  virtual ~ExhaustionModel() = default;
  virtual int dim() const = 0;
  virtual double tau(const CVec& z) const = 0;
  // d tau / d z_j.
  virtual CVec dtau(const CVec& z) const = 0;
  // H_ij = d^2 tau / dz_i dzbar_j.
  virtual CMat hessian(const CVec& z) const = 0;
  virtual bool in_domain(const CVec&) const { return true; }
};

// tau = |z|^2 on C^n.
class EuclideanNormSq : public ExhaustionModel {
 public:
  explicit EuclideanNormSq(int n);
  int dim() const override { return n_; }
  double tau(const CVec& z) const override;
  CVec dtau(const CVec& z) const override;
  CMat hessian(const CVec& z) const override;

 private:
  int n_;
};

// u = log tau and its derivatives: du_j = du/dz_j, ddbar_ij = d^2u/dz_i dzbar_j.
struct LogPotential {
  double u = 0.0;
  CVec du;
  CMat ddbar;
};

// tau = e^u for a supplied potential u, e.g. the pulled-back leaf potential.
class LineBundleModel : public ExhaustionModel {
 public:
  using Potential = std::function<LogPotential(const CVec&)>;
  using Domain = std::function<bool(const CVec&)>;

  LineBundleModel(int n, Potential u, Domain domain = {});
  int dim() const override { return n_; }
  double tau(const CVec& z) const override;
  CVec dtau(const CVec& z) const override;
  // e^u (u_ij + u_i u_jbar).
  CMat hessian(const CVec& z) const override;
  bool in_domain(const CVec& z) const override;
  LogPotential potential(const CVec& z) const { return u_(z); }

 private:
  int n_;
  Potential u_;
  Domain domain_;
};

struct ComplexGradient {
  CVec Y;
  double condition = 1.0;
};

// Solves conj(H) Y = conj(dtau). Throws InvalidInput when H is singular.
ComplexGradient complex_gradient(const ExhaustionModel& model, const CVec& z,
                                 double max_condition = 1e12);

}  // namespace grauert::flow
