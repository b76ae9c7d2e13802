#include "grauert/tube/potential.hpp"

#include <cmath>

#include "grauert/common.hpp"

namespace grauert::tube {

PotentialDiagnostics potential_diagnostics(double E) {
  if (!(E >= 0.0)) throw InvalidInput("energy must be nonnegative");
  const double y = std::sqrt(2.0 * E);  // half of 2 sqrt(2E)
  PotentialDiagnostics d;
  d.E = E;
  d.u = std::sqrt(E);
  // log(1 + cosh 2y) = log 2 + 2 log cosh y, written without overflow.
  d.rho_pot = 2.0 * y + 2.0 * std::log1p(std::exp(-2.0 * y)) - std::log(2.0);
  d.omega_pair = std::tanh(y);
  return d;
}

double leaf_potential(double tau) { return std::abs(tau) / std::sqrt(2.0); }

}  // namespace grauert::tube
