#pragma once

namespace grauert::tube {

struct PotentialDiagnostics {
  double E = 0.0;
  double u = 0.0;
  // log(1 + cosh 2 sqrt(2E)).
  double rho_pot = 0.0;
  // omega(xi, eta) = sinh x / (1 + cosh x) with x = 2 sqrt(2E).
  double omega_pair = 0.0;
};

PotentialDiagnostics potential_diagnostics(double E);

// u along a unit-speed leaf at height tau: |tau| / sqrt 2.
double leaf_potential(double tau);

}  // namespace grauert::tube
