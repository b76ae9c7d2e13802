#pragma once

// zeta r_t(f) = rho g on the circle with rho > 0 and g holomorphic,
// nonvanishing, |g(0)| = 1, g(0) = e^{i theta0}.

#include "grauert/common.hpp"

namespace grauert::disk {

struct RHFactorization {
  RVector rho_boundary;
  // Modes k >= 0 of g on the grid (the rest vanish).
  CVector g_fourier;
  // Boundary samples of g and of log g.
  CVector g_boundary;
  CVector log_g_boundary;
  double theta0 = 0.0;
};

// Throws WindingError if phi vanishes or winds around 0.
RHFactorization rh_factorize(const CVector& phi);

}  // namespace grauert::disk
