#include "grauert/geom/jacobi.hpp"

#include <cmath>

#include "grauert/spectral.hpp"

namespace grauert::geom {
namespace {

constexpr double kTrustTol = 1e-8;
constexpr double kRelativeFloor = 1e-13;
constexpr double kClosureTol = 1e-6;

struct Fit {
  double intercept, slope;
};

Fit fit_log_decay(const CVector& c, std::size_t m, int lo, int hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int k = lo; k <= hi; ++k) {
    const double mag = std::max(std::abs(c[k]), std::abs(c[m - k]));
    if (mag <= 0.0) continue;
    const double y = std::log(mag);
    sx += k;
    sy += y;
    sxx += double(k) * k;
    sxy += k * y;
    ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {(sy - slope * sx) / n, slope};
}

}  // namespace

Complex CurvatureSeries::coeff(int k) const {
  if (std::abs(k) > kmax) return 0.0;
  return coeffs[static_cast<std::size_t>(k + kmax)];
}

Complex CurvatureSeries::operator()(Complex z) const {
  if (kmax == 0) return coeffs.empty() ? Complex(0.0) : coeffs[0];
  const Complex u = std::exp(kI * z);
  const Complex uinv = 1.0 / u;
  Complex pos = 0.0, neg = 0.0;
  for (int k = kmax; k >= 1; --k) {
    pos = (pos + coeff(k)) * u;
    neg = (neg + coeff(-k)) * uinv;
  }
  return coeff(0) + pos + neg;
}

CurvatureSeries curvature_fourier(const SurfaceMetric& metric, const Trajectory& geodesic) {
  if (geodesic.size() < 3) throw InvalidInput("trajectory too short");
  const std::size_t m = geodesic.size() - 1;
  if (!spectral::is_power_of_two(m)) throw InvalidInput("trajectory step count must be a power of two");
  const double span = geodesic.back().arclength - geodesic.front().arclength;
  if (std::abs(span - metric.period) > 1e-9 * metric.period)
    throw InvalidInput("trajectory does not cover one period");
  if (metric.is_periodic() && closure_defect(geodesic) > kClosureTol)
    throw InvalidInput("geodesic is not closed");

  CVector samples(m);
  for (std::size_t j = 0; j < m; ++j) samples[j] = metric.curvature(geodesic[j].position);
  CVector c = spectral::forward(samples);
  for (std::size_t k = 1; k < m / 2; ++k) {
    const Complex sym = 0.5 * (c[k] + std::conj(c[m - k]));
    c[k] = sym;
    c[m - k] = std::conj(sym);
  }
  c[0] = c[0].real();

  CurvatureSeries out;
  out.noise_floor = kRelativeFloor * std::max(1.0, std::abs(c[0]));
  auto mag = [&](std::size_t k) { return std::abs(c[k]); };
  int kmax = 0;
  for (std::size_t k = 1; k + 1 < m / 2; ++k) {
    if (mag(k) <= out.noise_floor && mag(k + 1) <= out.noise_floor) break;
    kmax = static_cast<int>(k);
  }
  out.kmax = kmax;
  out.coeffs.resize(static_cast<std::size_t>(2 * kmax + 1));
  for (int k = -kmax; k <= kmax; ++k)
    out.coeffs[static_cast<std::size_t>(k + kmax)] = c[k >= 0 ? std::size_t(k) : m - std::size_t(-k)];
  if (kmax == 0) return out;

  Fit fit;
  if (kmax >= 4) {
    fit = fit_log_decay(c, m, std::max(1, kmax / 4), kmax);
  } else {
    // Too few modes for a fit: decay from |c_1| down to the floor.
    fit.slope = (std::log(out.noise_floor) - std::log(mag(1))) / kmax;
    fit.intercept = std::log(mag(1)) - fit.slope;
  }
  const double w = -fit.slope;
  out.decay_rate = w;
  if (!(w > 0.0)) {
    out.tau_cert = 0.0;
    return out;
  }

  auto error_bound = [&](double tau) {
    double noise = 1.0;
    for (int k = 1; k <= kmax; ++k) noise += 2.0 * std::exp(k * tau);
    noise *= out.noise_floor;
    const double q = std::exp(-(w - tau));
    const double tail = 2.0 * std::exp(fit.intercept) * std::pow(q, kmax + 1) / (1.0 - q);
    return noise + tail;
  };
  double lo = 0.0, hi = w;
  if (error_bound(lo) > kTrustTol) {
    out.tau_cert = 0.0;
    return out;
  }
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (error_bound(mid) <= kTrustTol ? lo : hi) = mid;
  }
  out.tau_cert = lo;
  return out;
}

JacobiFrame advance(const CurvatureSeries& k, const JacobiFrame& frame, Complex target,
                    double step) {
  if (!(step > 0.0)) throw InvalidInput("jacobi step must be positive");
  const Complex delta = target - frame.sigma_tau;
  const double len = std::abs(delta);
  JacobiFrame f = frame;
  if (len == 0.0) return f;
  const Complex d = delta / len;
  const auto n = static_cast<std::size_t>(std::ceil(len / step - 1e-12));
  const double h = len / static_cast<double>(n);

  struct S {
    Complex y, yp, z, zp;
  };
  auto rhs = [&](Complex at, const S& s) {
    const Complex kk = k(at);
    return S{d * s.yp, -d * kk * s.y, d * s.zp, -d * kk * s.z};
  };
  auto add = [](const S& s, Complex c, const S& t) {
    return S{s.y + c * t.y, s.yp + c * t.yp, s.z + c * t.z, s.zp + c * t.zp};
  };
  S s{f.Y, f.Yp, f.Z, f.Zp};
  const Complex start = f.sigma_tau;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex z0 = start + d * (h * static_cast<double>(i));
    const Complex zm = z0 + d * (0.5 * h);
    const Complex z1 = start + d * (h * static_cast<double>(i + 1));
    const S k1 = rhs(z0, s);
    const S k2 = rhs(zm, add(s, 0.5 * h, k1));
    const S k3 = rhs(zm, add(s, 0.5 * h, k2));
    const S k4 = rhs(z1, add(s, h, k3));
    const double w = h / 6.0;
    s.y += w * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    s.yp += w * (k1.yp + 2.0 * k2.yp + 2.0 * k3.yp + k4.yp);
    s.z += w * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
    s.zp += w * (k1.zp + 2.0 * k2.zp + 2.0 * k3.zp + k4.zp);
  }
  f.sigma_tau = target;
  f.Y = s.y;
  f.Yp = s.yp;
  f.Z = s.z;
  f.Zp = s.zp;
  f.a = f.Z / f.Y;
  return f;
}

JacobiFrame frame_on_axis(const CurvatureSeries& k, double sigma, double step) {
  return advance(k, JacobiFrame{}, Complex(sigma, 0.0), step);
}

std::vector<JacobiFrame> continue_jacobi(const CurvatureSeries& k, const JacobiFrame& start,
                                         double tau_end, double step) {
  if (!(step > 0.0)) throw InvalidInput("jacobi step must be positive");
  const double sigma = start.sigma_tau.real();
  const double tau0 = start.sigma_tau.imag();
  std::vector<JacobiFrame> out{start};
  if (tau_end <= tau0) return out;
  const auto n = static_cast<std::size_t>(std::ceil((tau_end - tau0) / step - 1e-12));
  const double h = (tau_end - tau0) / static_cast<double>(n);
  out.reserve(n + 1);
  for (std::size_t i = 1; i <= n; ++i)
    out.push_back(advance(k, out.back(), Complex(sigma, tau0 + h * static_cast<double>(i)), h));
  return out;
}

JacobiFrame jacobi_at(const CurvatureSeries& k, Complex z, double step, bool vertical_first) {
  const Complex corner = vertical_first ? Complex(0.0, z.imag()) : Complex(z.real(), 0.0);
  return advance(k, advance(k, JacobiFrame{}, corner, step), z, step);
}

}  // namespace grauert::geom
