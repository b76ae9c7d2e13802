#include "grauert/disk/model.hpp"

#include <cmath>

namespace grauert::disk {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::plus:
      return "plus";
    case ModelKind::quadric:
      return "quadric";
    case ModelKind::flat:
      return "flat";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "plus") return ModelKind::plus;
  if (name == "quadric" || name == "quadric-like") return ModelKind::quadric;
  if (name == "flat") return ModelKind::flat;
  throw InvalidInput("unknown model '" + name + "'");
}

void HermitianModel::validate() const {
  if (dim < 2) throw InvalidInput("model dimension must be at least 2");
  if (!std::isfinite(kappa)) throw InvalidInput("kappa must be finite");
}

double HermitianModel::h(const CVector& zp, Complex zn) const {
  switch (kind) {
    case ModelKind::flat:
      return 1.0;
    case ModelKind::plus: {
      double s = 1.0;
      for (const auto& z : zp) s += std::norm(z);
      return s;
    }
    case ModelKind::quadric: {
      double e = -std::norm(zn);
      for (const auto& z : zp) e -= std::norm(z);
      e += 2.0 * kappa * (zp[0] * zp[0] * zn).real();
      return std::exp(e);
    }
  }
  return 1.0;
}

CVector HermitianModel::dh(const CVector& zp, Complex zn) const {
  CVector d(zp.size() + 1, 0.0);
  switch (kind) {
    case ModelKind::flat:
      break;
    case ModelKind::plus:
      for (std::size_t i = 0; i < zp.size(); ++i) d[i] = std::conj(zp[i]);
      break;
    case ModelKind::quadric: {
      const double hv = h(zp, zn);
      for (std::size_t i = 0; i < zp.size(); ++i) d[i] = -hv * std::conj(zp[i]);
      d[0] += hv * 2.0 * kappa * zp[0] * zn;
      d[zp.size()] = hv * (-std::conj(zn) + kappa * zp[0] * zp[0]);
      break;
    }
  }
  return d;
}

double HermitianModel::center_mixed_hessian() const {
  switch (kind) {
    case ModelKind::flat:
      return 0.0;
    case ModelKind::plus:
      return 1.0;
    case ModelKind::quadric:
      return -1.0;
  }
  return 0.0;
}

double HermitianModel::r(const CVector& zp, Complex t) const { return h(zp, lambda * t) * std::norm(t); }

CVector HermitianModel::r_base(const CVector& zp, Complex t) const {
  CVector d = dh(zp, lambda * t);
  d.pop_back();
  for (auto& v : d) v *= std::norm(t);
  return d;
}

Complex HermitianModel::r_t(const CVector& zp, Complex t) const {
  const Complex zn = lambda * t;
  return lambda * dh(zp, zn).back() * std::norm(t) + h(zp, zn) * std::conj(t);
}

}  // namespace grauert::disk
