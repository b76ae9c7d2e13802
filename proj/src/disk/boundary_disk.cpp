#include "grauert/disk/boundary_disk.hpp"

#include <cmath>

#include "grauert/spectral.hpp"

namespace grauert::disk {

std::size_t grid_size(int n_modes) {
  std::size_t m = 16;
  while (m < 4 * static_cast<std::size_t>(n_modes)) m *= 2;
  return m;
}

CVector BoundaryDisk::eval(Complex zeta) const {
  CVector p(fourier.size());
  for (std::size_t c = 0; c < fourier.size(); ++c) p[c] = spectral::eval_series(fourier[c], zeta);
  return p;
}

CVector BoundaryDisk::derivative(Complex zeta) const {
  CVector p(fourier.size());
  for (std::size_t c = 0; c < fourier.size(); ++c)
    p[c] = spectral::eval_series_derivative(fourier[c], zeta);
  return p;
}

CVector BoundaryDisk::second_derivative(Complex zeta) const {
  CVector p(fourier.size());
  for (std::size_t c = 0; c < fourier.size(); ++c) {
    Complex acc = 0.0;
    const auto& a = fourier[c];
    for (std::size_t k = a.size(); k-- > 2;) acc = acc * zeta + double(k) * double(k - 1) * a[k];
    p[c] = acc;
  }
  return p;
}

CVector BoundaryDisk::boundary(int c, std::size_t m) const {
  return spectral::series_on_circle(fourier[static_cast<std::size_t>(c)], m);
}

BoundaryDisk model_disk(const HermitianModel& model, const CVector& z_prime, int n_modes) {
  if (static_cast<int>(z_prime.size()) != model.base_dim())
    throw InvalidInput("base point has the wrong dimension");
  if (n_modes < 4) throw InvalidInput("need at least 4 modes");
  BoundaryDisk f;
  f.z_prime = z_prime;
  f.lambda = model.lambda;
  f.n_modes = n_modes;
  f.fourier.assign(static_cast<std::size_t>(model.dim), CVector(static_cast<std::size_t>(n_modes) + 1, 0.0));
  for (int i = 0; i < model.base_dim(); ++i) f.fourier[static_cast<std::size_t>(i)][0] = z_prime[static_cast<std::size_t>(i)];
  f.fourier.back()[1] = 1.0 / std::sqrt(model.h(z_prime, 0.0));
  return f;
}

double boundary_residual(const HermitianModel& model, const BoundaryDisk& f, std::size_t m) {
  if (m == 0) m = grid_size(f.n_modes);
  std::vector<CVector> b;
  for (int c = 0; c < f.dim(); ++c) b.push_back(f.boundary(c, m));
  double res = 0.0;
  CVector zp(static_cast<std::size_t>(f.dim() - 1));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t c = 0; c < zp.size(); ++c) zp[c] = b[c][j];
    res = std::max(res, std::abs(model.r(zp, b.back()[j]) - 1.0));
  }
  return res;
}

BoundaryDisk normalize_rotation(const BoundaryDisk& f) {
  const Complex d = f.fn_derivative_at_zero();
  if (std::abs(d) == 0.0) throw InvalidInput("f_n'(0) vanishes");
  const Complex rot = std::conj(d) / std::abs(d);  // zeta -> rot * zeta
  BoundaryDisk out = f;
  for (auto& comp : out.fourier) {
    Complex p = 1.0;
    for (auto& a : comp) {
      a *= p;
      p *= rot;
    }
  }
  out.fourier.back()[1] = std::abs(d);
  return out;
}

bool is_embedded(const BoundaryDisk& f, std::size_t m) {
  if (m == 0) m = grid_size(f.n_modes);
  std::vector<CVector> b;
  for (int c = 0; c < f.dim(); ++c) b.push_back(f.boundary(c, m));
  try {
    if (spectral::winding_number(b.back()) != 1) return false;
  } catch (const WindingError&) {
    return false;
  }
  auto dist = [&](std::size_t i, std::size_t j) {
    double s = 0.0;
    for (const auto& comp : b) s += std::norm(comp[i] - comp[j]);
    return std::sqrt(s);
  };
  double step = 0.0;
  for (std::size_t j = 0; j < m; ++j) step = std::max(step, dist(j, (j + 1) % m));
  // Nonadjacent samples must be farther apart than the local sampling step.
  const std::size_t gap = m / 16;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + gap; j < m; ++j) {
      if (m - (j - i) < gap) continue;
      if (dist(i, j) < step) return false;
    }
  for (std::size_t j = 0; j < m; ++j) {
    const Complex zeta = std::polar(1.0, kTwoPi * double(j) / double(m));
    double s = 0.0;
    for (const auto& v : f.derivative(zeta)) s += std::norm(v);
    if (s == 0.0) return false;
  }
  return true;
}

}  // namespace grauert::disk
