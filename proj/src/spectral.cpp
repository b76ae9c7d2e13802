#include "grauert/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace grauert::spectral {
namespace {

// Plans are created once per (size, direction) under a lock; execution with
// fftw_execute_dft on caller arrays is thread safe.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

CVector transform(std::span<const Complex> in, int sign) {
  const std::size_t n = in.size();
  if (!is_power_of_two(n)) throw InvalidInput("grid size must be a power of two");
  CVector src(in.begin(), in.end());
  CVector out(n);
  fftw_execute_dft(cache().get(n, sign), reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

CVector forward(std::span<const Complex> samples) {
  CVector c = transform(samples, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(samples.size());
  for (auto& v : c) v *= scale;
  return c;
}

CVector inverse(std::span<const Complex> coeffs) { return transform(coeffs, FFTW_BACKWARD); }

CVector hilbert_transform(std::span<const Complex> samples) {
  CVector c = forward(samples);
  const std::size_t m = c.size();
  for (std::size_t j = 0; j < m; ++j) {
    const long k = mode_of(j, m);
    if (k == 0 || j == m / 2)
      c[j] = 0.0;
    else
      c[j] *= (k > 0 ? -kI : kI);
  }
  return inverse(c);
}

RVector hilbert_transform(std::span<const double> samples) {
  CVector z(samples.begin(), samples.end());
  CVector h = hilbert_transform(z);
  RVector out(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) out[j] = h[j].real();
  return out;
}

CVector szego_project(std::span<const Complex> samples) {
  CVector c = forward(samples);
  const std::size_t m = c.size();
  for (std::size_t j = 0; j < m; ++j)
    if (j == 0 || j >= m / 2) c[j] = 0.0;
  return inverse(c);
}

CVector holomorphic_part(std::span<const Complex> samples) {
  CVector c = forward(samples);
  const std::size_t m = c.size();
  for (std::size_t j = m / 2; j < m; ++j) c[j] = 0.0;
  return inverse(c);
}

double negative_mode_energy(std::span<const Complex> samples) {
  CVector c = forward(samples);
  double e = 0.0;
  for (std::size_t j = c.size() / 2 + 1; j < c.size(); ++j) e += std::norm(c[j]);
  return e;
}

double mean(std::span<const double> samples) {
  double s = 0.0;
  for (double v : samples) s += v;
  return s / static_cast<double>(samples.size());
}

Complex mean(std::span<const Complex> samples) {
  Complex s = 0.0;
  for (const auto& v : samples) s += v;
  return s / static_cast<double>(samples.size());
}

Complex eval_series(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex eval_series_derivative(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * coeffs[k];
  return acc;
}

CVector series_on_circle(std::span<const Complex> coeffs, std::size_t m) {
  if (coeffs.size() > m / 2) throw InvalidInput("series longer than half the grid");
  CVector c(m, 0.0);
  std::copy(coeffs.begin(), coeffs.end(), c.begin());
  return inverse(c);
}

CVector nonnegative_modes(std::span<const Complex> samples, std::size_t count) {
  CVector c = forward(samples);
  c.resize(std::min(count, c.size()));
  c.resize(count, 0.0);
  return c;
}

RVector unwrapped_arg(std::span<const Complex> samples) {
  RVector a(samples.size());
  if (samples.empty()) return a;
  a[0] = std::arg(samples[0]);
  for (std::size_t j = 1; j < samples.size(); ++j)
    a[j] = a[j - 1] + std::arg(samples[j] / samples[j - 1]);
  return a;
}

int winding_number(std::span<const Complex> samples) {
  double total = 0.0;
  const std::size_t m = samples.size();
  for (std::size_t j = 0; j < m; ++j) {
    const Complex a = samples[j], b = samples[(j + 1) % m];
    if (a == 0.0 || b == 0.0) throw WindingError("curve passes through the origin");
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace grauert::spectral
