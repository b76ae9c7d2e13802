#include "grauert/flow/exhaustion.hpp"

#include <cmath>

namespace grauert::flow {

EuclideanNormSq::EuclideanNormSq(int n) : n_(n) {
  if (n < 1) throw InvalidInput("dimension must be positive");
}

double EuclideanNormSq::tau(const CVec& z) const { return z.squaredNorm(); }

CVec EuclideanNormSq::dtau(const CVec& z) const { return z.conjugate(); }

CMat EuclideanNormSq::hessian(const CVec&) const { return CMat::Identity(n_, n_); }

LineBundleModel::LineBundleModel(int n, Potential u, Domain domain)
    : n_(n), u_(std::move(u)), domain_(std::move(domain)) {
  if (n < 1) throw InvalidInput("dimension must be positive");
  if (!u_) throw InvalidInput("potential callback is required");
}

double LineBundleModel::tau(const CVec& z) const { return std::exp(u_(z).u); }

CVec LineBundleModel::dtau(const CVec& z) const {
  const auto p = u_(z);
  return std::exp(p.u) * p.du;
}

CMat LineBundleModel::hessian(const CVec& z) const {
  const auto p = u_(z);
  return std::exp(p.u) * (p.ddbar + p.du * p.du.adjoint());
}

bool LineBundleModel::in_domain(const CVec& z) const { return !domain_ || domain_(z); }

ComplexGradient complex_gradient(const ExhaustionModel& model, const CVec& z,
                                 double max_condition) {
  const CMat h = model.hessian(z).conjugate();
  Eigen::JacobiSVD<CMat> svd(h);
  const auto& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                               : std::numeric_limits<double>::infinity();
  if (!(cond <= max_condition))
    throw InvalidInput("complex Hessian is singular (condition " + std::to_string(cond) + ")");
  return {h.partialPivLu().solve(CVec(model.dtau(z).conjugate())), cond};
}

}  // namespace grauert::flow
