#include "grauert/disk/boundary_solve.hpp"

#include <cmath>

#include "grauert/spectral.hpp"

namespace grauert::disk {
namespace {

CVector unit_circle(std::size_t m) {
  CVector z(m);
  for (std::size_t j = 0; j < m; ++j) z[j] = std::polar(1.0, kTwoPi * double(j) / double(m));
  return z;
}

void check_variation(const BaseVariation& d, int base_dim, int n_modes) {
  if (static_cast<int>(d.size()) != base_dim) throw InvalidInput("variation has the wrong number of components");
  for (const auto& c : d) {
    if (static_cast<int>(c.size()) != n_modes + 1) throw InvalidInput("variation has the wrong mode count");
    if (std::abs(c[0]) != 0.0) throw InvalidInput("base variations must vanish at 0");
  }
}

}  // namespace

BaseVariation zero_variation(int base_dim, int n_modes) {
  return BaseVariation(static_cast<std::size_t>(base_dim), CVector(static_cast<std::size_t>(n_modes) + 1, 0.0));
}

BoundaryData boundary_data(const HermitianModel& model, const BoundaryDisk& f, std::size_t m) {
  if (m == 0) m = grid_size(f.n_modes);
  BoundaryData d;
  d.m = m;
  for (int c = 0; c < f.dim(); ++c) d.f.push_back(f.boundary(c, m));
  const auto nb = static_cast<std::size_t>(f.dim() - 1);
  d.r_base.assign(nb, CVector(m));
  d.r_t.resize(m);
  const CVector zeta = unit_circle(m);
  CVector phi(m), zp(nb);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t c = 0; c < nb; ++c) zp[c] = d.f[c][j];
    const Complex t = d.f.back()[j];
    const CVector rb = model.r_base(zp, t);
    for (std::size_t c = 0; c < nb; ++c) d.r_base[c][j] = rb[c];
    d.r_t[j] = model.r_t(zp, t);
    phi[j] = zeta[j] * d.r_t[j];
  }
  d.rh = rh_factorize(phi);
  return d;
}

TangentResult tangent_delta_fn(const HermitianModel& model, const BoundaryDisk& f,
                               const BaseVariation& delta_base) {
  check_variation(delta_base, model.base_dim(), f.n_modes);
  const BoundaryData d = boundary_data(model, f);
  const double theta0 = d.rh.theta0;
  if (std::abs(theta0) >= kPi / 2 - 0.1) throw InvalidInput("theta0 outside the perturbative range");
  const std::size_t m = d.m;
  std::vector<CVector> df;
  for (const auto& c : delta_base) df.push_back(spectral::series_on_circle(c, m));

  RVector P(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < df.size(); ++c) s += d.r_base[c][j] * df[c][j];
    P[j] = s.real() / d.rh.rho_boundary[j];
  }
  const RVector tp = spectral::hilbert_transform(P);
  const double a = -spectral::mean(P);
  const double b = std::tan(theta0) * a;
  const CVector zeta = unit_circle(m);
  CVector dfn(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Complex q(-P[j], -tp[j] + b);
    dfn[j] = zeta[j] * q / d.rh.g_boundary[j];
  }

  TangentResult out;
  out.delta_fn = spectral::nonnegative_modes(dfn, static_cast<std::size_t>(f.n_modes) + 1);
  const CVector dfn_trunc = spectral::series_on_circle(out.delta_fn, m);
  for (std::size_t j = 0; j < m; ++j) {
    Complex s = d.r_t[j] * dfn_trunc[j];
    for (std::size_t c = 0; c < df.size(); ++c) s += d.r_base[c][j] * df[c][j];
    out.linearized_residual = std::max(out.linearized_residual, std::abs(2.0 * s.real()));
  }
  return out;
}

BoundarySolution solve_boundary(const HermitianModel& model, const CVector& z_prime,
                                const BaseVariation& delta_base, int n_modes,
                                const BoundarySolveOptions& opt, const RVector* v_init) {
  if (static_cast<int>(z_prime.size()) != model.base_dim()) throw InvalidInput("base point has the wrong dimension");
  check_variation(delta_base, model.base_dim(), n_modes);
  const std::size_t m = grid_size(n_modes);
  const auto nb = z_prime.size();
  const CVector zeta = unit_circle(m);

  std::vector<CVector> base(nb);
  for (std::size_t c = 0; c < nb; ++c) {
    CVector coeffs = delta_base[c];
    coeffs[0] = z_prime[c];
    base[c] = spectral::series_on_circle(coeffs, m);
  }
  std::vector<CVector> zp(m, CVector(nb));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t c = 0; c < nb; ++c) zp[j][c] = base[c][j];

  RVector v = v_init && v_init->size() == m ? *v_init : RVector(m, 0.0);
  RVector u(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double s = 1.0 / model.h(zp[j], 0.0) - v[j] * v[j];
    u[j] = std::sqrt(std::max(s, 1e-6)) - 1.0;
  }

  auto solve_u = [&](std::size_t j) {
    double x = u[j];
    for (int it = 0; it < 60; ++it) {
      const Complex t = zeta[j] * Complex(1.0 + x, v[j]);
      const double F = model.r(zp[j], t) - 1.0;
      const double dF = 2.0 * (model.r_t(zp[j], t) * zeta[j]).real();
      if (dF == 0.0) throw ConvergenceFailure("dr/du vanished in the boundary solve", {F});
      const double dx = F / dF;
      x -= dx;
      if (std::abs(dx) <= opt.newton_tol * (1.0 + std::abs(x))) break;
    }
    u[j] = x;
  };

  BoundarySolution out;
  RVector history;
  double prev = 0.0;
  int it = 0;
  bool converged = false;
  for (it = 1; it <= opt.max_iter; ++it) {
    for (std::size_t j = 0; j < m; ++j) solve_u(j);
    const RVector vn = spectral::hilbert_transform(u);
    double diff = 0.0;
    for (std::size_t j = 0; j < m; ++j) diff = std::max(diff, std::abs(vn[j] - v[j]));
    history.push_back(diff);
    v = vn;
    if (diff <= opt.tol) {
      converged = true;
      break;
    }
    if (it >= 2 && prev > 0.0) {
      const double ratio = diff / prev;
      out.contraction = std::max(out.contraction, ratio);
      if (ratio >= 1.0) {
        // Stagnation at round-off level counts as convergence.
        if (diff <= 100.0 * opt.tol) {
          converged = true;
          break;
        }
        throw ContractionLost("boundary fixed point stopped contracting (ratio " + std::to_string(ratio) + ")");
      }
    }
    prev = diff;
  }
  if (!converged) throw ConvergenceFailure("boundary fixed point did not converge", history);
  for (std::size_t j = 0; j < m; ++j) solve_u(j);

  CVector w(m);
  const RVector tu = spectral::hilbert_transform(u);
  for (std::size_t j = 0; j < m; ++j) w[j] = Complex(u[j], tu[j]);
  const CVector wc = spectral::forward(w);

  out.iterations = it;
  out.v = tu;
  out.w.assign(wc.begin(), wc.begin() + n_modes);
  out.w[0] = out.w[0].real();
  double tail = 0.0;
  for (int k = 3 * n_modes / 4; k < static_cast<int>(m / 2); ++k) tail += std::norm(wc[static_cast<std::size_t>(k)]);
  out.tail_energy = tail;

  BoundaryDisk& f = out.disk;
  f.z_prime = z_prime;
  f.lambda = model.lambda;
  f.n_modes = n_modes;
  for (std::size_t c = 0; c < nb; ++c) {
    CVector coeffs = delta_base[c];
    coeffs[0] = z_prime[c];
    f.fourier.push_back(coeffs);
  }
  CVector fn(static_cast<std::size_t>(n_modes) + 1, 0.0);
  fn[1] = 1.0;
  for (int k = 0; k < n_modes; ++k) fn[static_cast<std::size_t>(k) + 1] += out.w[static_cast<std::size_t>(k)];
  f.fourier.push_back(fn);
  out.residual = boundary_residual(model, f, m);
  return out;
}

}  // namespace grauert::disk
