#include "grauert/disk/verify.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "grauert/disk/energy.hpp"
#include "grauert/spectral.hpp"

namespace grauert::disk {

bool LeviReport::passes(double max_ratio, double leaf_tol) const {
  return constant_sign && ratio <= max_ratio && restricted_positive && max_leaf_eig <= leaf_tol;
}

LeviSample levi_sample(ExtremalFamily& family, const CVector& point) {
  const PotentialJet j = family.jet_at(point);
  const auto n = static_cast<Eigen::Index>(j.du.size());
  const Eigen::Map<const Eigen::VectorXcd> du(j.du.data(), n);
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  L.block(0, 1, 1, n) = du.conjugate().transpose();
  L.block(1, 0, n, 1) = du;
  L.bottomRightCorner(n, n) = j.ddbar;

  LeviSample s;
  s.point = point;
  s.det = L.determinant().real();
  s.det_t2 = s.det * std::norm(point.back());

  // ker du = {v : sum du_i v_i = 0}; the Levi form there is v^T H conj(v).
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(du.transpose());
  const Eigen::MatrixXcd K = lu.kernel();
  Eigen::MatrixXcd Q = Eigen::HouseholderQR<Eigen::MatrixXcd>(K).householderQ();
  Q = Q.leftCols(K.cols()).eval();
  const Eigen::MatrixXcd R = Q.transpose() * j.ddbar * Q.conjugate();
  s.restricted_min = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(0.5 * (R + R.adjoint())).eigenvalues()(0);

  const Eigen::Map<const Eigen::VectorXcd> v(j.leaf_tangent.data(), n);
  s.leaf_eig = (v.transpose() * j.ddbar * v.conjugate())(0).real() / v.squaredNorm();
  return s;
}

LeviReport levi_verify(ExtremalFamily& family, const std::vector<CVector>& points) {
  if (points.empty()) throw InvalidInput("no Levi sample points");
  LeviReport rep;
  rep.min_abs_det_t2 = std::numeric_limits<double>::infinity();
  rep.min_restricted = std::numeric_limits<double>::infinity();
  int pos = 0, neg = 0;
  for (const auto& p : points) {
    const LeviSample s = levi_sample(family, p);
    (s.det > 0 ? pos : neg) += (s.det != 0.0);
    rep.min_abs_det_t2 = std::min(rep.min_abs_det_t2, std::abs(s.det_t2));
    rep.max_abs_det_t2 = std::max(rep.max_abs_det_t2, std::abs(s.det_t2));
    rep.min_restricted = std::min(rep.min_restricted, s.restricted_min);
    rep.max_leaf_eig = std::max(rep.max_leaf_eig, std::abs(s.leaf_eig));
    rep.samples.push_back(s);
  }
  const int total = static_cast<int>(points.size());
  rep.sign = pos == total ? 1 : (neg == total ? -1 : 0);
  rep.constant_sign = rep.sign != 0;
  rep.ratio = rep.min_abs_det_t2 > 0.0 ? rep.max_abs_det_t2 / rep.min_abs_det_t2
                                       : std::numeric_limits<double>::infinity();
  rep.restricted_positive = rep.min_restricted > 0.0;
  return rep;
}

std::vector<CVector> levi_points(const std::vector<CVector>& grid) {
  std::vector<CVector> pts;
  for (const auto& z : grid)
    for (Complex t : {Complex(0.5, 0.0), Complex(0.0, 0.3), Complex(-0.4, -0.4)}) {
      CVector p = z;
      p.push_back(t);
      pts.push_back(p);
    }
  return pts;
}

TangencyReport tangency_verify(ExtremalFamily& family, const BoundaryDisk& leaf) {
  const auto& model = family.model();
  const BoundaryData data = boundary_data(model, leaf);
  const std::size_t nb = data.r_base.size();
  std::vector<CVector> g_base(nb);
  for (std::size_t l = 0; l < nb; ++l) {
    CVector q(data.m);
    for (std::size_t k = 0; k < data.m; ++k) q[k] = data.r_base[l][k] / data.rh.rho_boundary[k];
    g_base[l] = spectral::nonnegative_modes(q, data.m / 2);
  }

  TangencyReport rep;
  rep.negative_mode_energy = negative_mode_energy(model, leaf);
  for (double rad : {0.25, 0.5, 0.75, 0.9})
    for (int k = 0; k < 8; ++k) {
      const Complex zeta = std::polar(rad, kTwoPi * (k + 0.25) / 8.0);
      CVector beta(nb + 1);
      for (std::size_t l = 0; l < nb; ++l) beta[l] = zeta * spectral::eval_series(g_base[l], zeta);
      beta[nb] = spectral::eval_series(data.rh.g_fourier, zeta);

      const LeafPoint guess{leaf.z_prime, zeta};
      const LeafPoint x = family.invert(leaf.eval(zeta), &guess);
      const PotentialJet j = family.jet(x);
      Complex bv = 0.0, uv = 0.0;
      for (std::size_t i = 0; i <= nb; ++i) {
        bv += beta[i] * j.leaf_tangent[i];
        uv += x.zeta * j.du[i] * j.leaf_tangent[i];
      }
      const Complex c = -bv / uv;
      double err = 0.0;
      for (std::size_t i = 0; i <= nb; ++i) err += std::norm(beta[i] / c + x.zeta * j.du[i]);
      rep.residual = std::max(rep.residual, std::sqrt(err));
    }
  return rep;
}

}  // namespace grauert::disk
