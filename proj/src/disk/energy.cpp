#include "grauert/disk/energy.hpp"

#include <cmath>

#include "grauert/spectral.hpp"

namespace grauert::disk {

double distortion_energy(const BoundaryDisk& f) { return f.fn_derivative_at_zero().real(); }

double robin_formula(const HermitianModel& model, const BoundaryDisk& f) {
  const Complex d = f.fn_derivative_at_zero();
  if (std::abs(d) == 0.0) throw InvalidInput("f_n'(0) vanishes: disk is not transverse to the divisor");
  return -std::log(model.h(f.z_prime, 0.0)) - 2.0 * std::log(std::abs(d));
}

double robin_extrapolated(const HermitianModel& model, const BoundaryDisk& f, int levels,
                          std::size_t samples) {
  if (std::abs(f.fn_derivative_at_zero()) == 0.0)
    throw InvalidInput("f_n'(0) vanishes: disk is not transverse to the divisor");
  if (levels < 2) throw InvalidInput("need at least two radii");
  const CVector& fn = f.fourier.back();
  const CVector quotient(fn.begin() + 1, fn.end());  // f_n / zeta
  const auto nb = static_cast<std::size_t>(f.dim() - 1);

  std::vector<double> table;
  for (int lev = 0; lev < levels; ++lev) {
    const double s = 0.1 / std::pow(2.0, lev);
    double acc = 0.0;
    for (std::size_t j = 0; j < samples; ++j) {
      const Complex zeta = std::polar(s, kTwoPi * double(j) / double(samples));
      CVector zp(nb);
      for (std::size_t c = 0; c < nb; ++c) zp[c] = spectral::eval_series(f.fourier[c], zeta);
      const Complex t = spectral::eval_series(fn, zeta);
      acc += -std::log(model.h(zp, model.lambda * t)) - std::log(std::norm(spectral::eval_series(quotient, zeta)));
    }
    table.push_back(acc / double(samples));
  }
  // Neville in s^2; consecutive radii differ by a factor 4 in s^2.
  for (int col = 1; col < levels; ++col) {
    const double factor = std::pow(4.0, col);
    for (int i = levels - 1; i >= col; --i)
      table[static_cast<std::size_t>(i)] =
          (factor * table[static_cast<std::size_t>(i)] - table[static_cast<std::size_t>(i - 1)]) / (factor - 1.0);
  }
  return table.back();
}

double pairing(const BaseVariation& a, const BaseVariation& b) {
  double s = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c)
    for (std::size_t k = 0; k < a[c].size(); ++k) s += (a[c][k] * std::conj(b[c][k])).real();
  return 0.5 * s;
}

double variation_norm(const BaseVariation& a) { return std::sqrt(pairing(a, a)); }

BaseVariation grad_energy(const HermitianModel& model, const BoundaryDisk& f) {
  const BoundaryData d = boundary_data(model, f);
  const double sec = 1.0 / std::cos(d.rh.theta0);
  BaseVariation g;
  for (const auto& rl : d.r_base) {
    CVector x(d.m);
    for (std::size_t j = 0; j < d.m; ++j) x[j] = std::conj(rl[j] / d.rh.rho_boundary[j]);
    const CVector c = spectral::forward(x);
    CVector modes(static_cast<std::size_t>(f.n_modes) + 1, 0.0);
    for (int k = 1; k < f.n_modes; ++k) modes[static_cast<std::size_t>(k)] = -2.0 * sec * c[static_cast<std::size_t>(k)];
    g.push_back(modes);
  }
  return g;
}

double negative_mode_energy(const HermitianModel& model, const BoundaryDisk& f) {
  const BoundaryData d = boundary_data(model, f);
  double e = 0.0;
  for (const auto& rl : d.r_base) {
    CVector x(d.m);
    for (std::size_t j = 0; j < d.m; ++j) x[j] = rl[j] / d.rh.rho_boundary[j];
    e += spectral::negative_mode_energy(x);
  }
  return e;
}

}  // namespace grauert::disk
