#pragma once

// Complexified normal Jacobi fields along a closed geodesic. K(gamma(sigma)) is
// continued into the strip through its Fourier series; Y, Z solve
// Y'' + K Y = 0 with (Y, Y', Z, Z')(0) = (1, 0, 0, 1), and a = Z / Y.

#include <limits>

#include "grauert/common.hpp"
#include "grauert/geom/geodesic.hpp"

namespace grauert::geom {

struct CurvatureSeries {
  // c_k for k = -kmax..kmax, stored at index k + kmax.
  CVector coeffs;
  int kmax = 0;
  // Fitted rate w in |c_k| ~ C e^{-w |k|}; infinity if only c_0 survives.
  double decay_rate = std::numeric_limits<double>::infinity();
  double noise_floor = 0.0;
  // Largest tau where the truncated series is trusted to 1e-8.
  double tau_cert = std::numeric_limits<double>::infinity();

  Complex coeff(int k) const;
  Complex operator()(Complex z) const;
};

// Coefficients of K along a trajectory covering one period with a power of two
// number of steps. Throws InvalidInput if the trajectory does not close.
CurvatureSeries curvature_fourier(const SurfaceMetric& metric, const Trajectory& geodesic);

struct JacobiFrame {
  Complex sigma_tau{};
  Complex Y{1.0}, Yp{0.0}, Z{0.0}, Zp{1.0};
  Complex a{0.0};
  Complex wronskian() const { return Y * Zp - Yp * Z; }
};

// RK4 along the straight segment from frame.sigma_tau to target.
JacobiFrame advance(const CurvatureSeries& k, const JacobiFrame& frame, Complex target,
                    double step);

// Frame at sigma (tau = 0), reached along the real axis.
JacobiFrame frame_on_axis(const CurvatureSeries& k, double sigma, double step = 1e-3);

// Vertical line sigma + i tau, tau in [tau_start, tau_end], one frame per step.
std::vector<JacobiFrame> continue_jacobi(const CurvatureSeries& k, const JacobiFrame& start,
                                         double tau_end, double step);

// Frame at z by a two-leg staircase: real then imaginary, or the reverse.
JacobiFrame jacobi_at(const CurvatureSeries& k, Complex z, double step = 1e-3,
                      bool vertical_first = false);

}  // namespace grauert::geom
