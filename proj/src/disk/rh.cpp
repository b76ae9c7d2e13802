#include "grauert/disk/rh.hpp"

#include <cmath>

#include "grauert/spectral.hpp"

namespace grauert::disk {

RHFactorization rh_factorize(const CVector& phi) {
  const std::size_t m = phi.size();
  const int winding = spectral::winding_number(phi);
  if (winding != 0)
    throw WindingError("zeta r_t(f) has winding number " + std::to_string(winding) + ", expected 0");

  RVector arg = spectral::unwrapped_arg(phi);
  // Branch with mean in (-pi, pi].
  const double shift = kTwoPi * std::round(spectral::mean(arg) / kTwoPi);
  for (auto& a : arg) a -= shift;
  const RVector targ = spectral::hilbert_transform(arg);

  RHFactorization out;
  out.theta0 = spectral::mean(arg);
  out.rho_boundary.resize(m);
  out.log_g_boundary.resize(m);
  out.g_boundary.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    out.log_g_boundary[j] = Complex(-targ[j], arg[j]);
    out.g_boundary[j] = std::exp(out.log_g_boundary[j]);
    out.rho_boundary[j] = std::abs(phi[j]) * std::exp(targ[j]);
  }
  out.g_fourier = spectral::forward(out.g_boundary);
  for (std::size_t j = m / 2; j < m; ++j) out.g_fourier[j] = 0.0;
  return out;
}

}  // namespace grauert::disk
