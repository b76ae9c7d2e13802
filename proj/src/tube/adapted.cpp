#include "grauert/tube/adapted.hpp"

namespace grauert::tube {

AdaptedJ adapted_structure(const geom::JacobiFrame& frame, int geodesic_id) {
  const double x = frame.a.real();
  const double y = frame.a.imag();
  if (!(y > 0.0)) throw OutsideTube("Im a <= 0: point is outside the tube", frame.sigma_tau);
  AdaptedJ out;
  out.at = frame.sigma_tau;
  out.geodesic_id = geodesic_id;
  out.re_a = x;
  out.im_a = y;
  out.e = 1.0 / y;
  // J xi = e (eta - x xi); J eta follows from J^2 = -1.
  out.J_matrix << -x / y, -(x * x + y * y) / y,
                  1.0 / y, x / y;
  return out;
}

}  // namespace grauert::tube
