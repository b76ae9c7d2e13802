#pragma once

// Fourier machinery on the unit circle. Boundary functions are sampled on the
// uniform grid theta_j = 2 pi j / M and treated as band-limited to |k| < M/2;
// the Nyquist mode is annihilated by every multiplier below.

#include <span>

#include "grauert/common.hpp"

namespace grauert::spectral {

bool is_power_of_two(std::size_t n);

// Coefficients c_k with f(theta_j) = sum_k c_k e^{i k theta_j}; index k >= 0 at
// position k, k < 0 at position M + k.
CVector forward(std::span<const Complex> samples);
CVector inverse(std::span<const Complex> coeffs);

// Signed mode number of storage index j on a grid of size m.
inline long mode_of(std::size_t j, std::size_t m) {
  return j < m / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(m);
}

// Harmonic conjugate normalized to vanish at the center:
// mode k -> -i sign(k) mode k, mode 0 -> 0. Complex-linear.
CVector hilbert_transform(std::span<const Complex> samples);
RVector hilbert_transform(std::span<const double> samples);

// Projection onto boundary values of holomorphic functions vanishing at 0.
CVector szego_project(std::span<const Complex> samples);

// Keeps modes k >= 0 (holomorphic part, including the mean).
CVector holomorphic_part(std::span<const Complex> samples);

// Sum of |c_k|^2 over k <= -1.
double negative_mode_energy(std::span<const Complex> samples);

double mean(std::span<const double> samples);
Complex mean(std::span<const Complex> samples);

// Evaluate a holomorphic series sum_{k>=0} c_k z^k (Horner).
Complex eval_series(std::span<const Complex> coeffs, Complex z);
// Derivative of the series.
Complex eval_series_derivative(std::span<const Complex> coeffs, Complex z);

// Boundary samples of a holomorphic series on an m-point grid.
CVector series_on_circle(std::span<const Complex> coeffs, std::size_t m);

// Mode coefficients 0..count-1 of a boundary function (only k >= 0 kept).
CVector nonnegative_modes(std::span<const Complex> samples, std::size_t count);

// Winding number of a nonvanishing closed sample curve about 0.
int winding_number(std::span<const Complex> samples);

// Continuous argument along the closed curve, starting in (-pi, pi].
RVector unwrapped_arg(std::span<const Complex> samples);

}  // namespace grauert::spectral
