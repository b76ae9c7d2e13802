#include "grauert/flow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace grauert::flow {
namespace {

double hyperplane(const CVec& z, const CVec& z0, const CVec& v0) {
  return v0.dot(z - z0).real();
}

}  // namespace

CVec field(const ExhaustionModel& model, const CVec& z, FieldKind kind) {
  const CVec y = complex_gradient(model, z).Y;
  return kind == FieldKind::xi ? CVec(0.5 * y) : CVec(Complex(0.0, -0.5) * y);
}

CVec flow_step(const ExhaustionModel& model, const CVec& z, FieldKind kind, double h) {
  const CVec k1 = field(model, z, kind);
  const CVec k2 = field(model, z + 0.5 * h * k1, kind);
  const CVec k3 = field(model, z + 0.5 * h * k2, kind);
  const CVec k4 = field(model, z + h * k3, kind);
  return z + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

CVec flow_to(const ExhaustionModel& model, const CVec& z, FieldKind kind, double t,
             double step) {
  if (!(step > 0.0)) throw InvalidInput("flow step must be positive");
  const auto n = static_cast<std::size_t>(std::ceil(std::abs(t) / step - 1e-12));
  if (n == 0) return z;
  const double h = t / static_cast<double>(n);
  CVec w = z;
  for (std::size_t i = 0; i < n; ++i) w = flow_step(model, w, kind, h);
  return w;
}

FlowTrace flow(const ExhaustionModel& model, const CVec& z, FieldKind kind, double t_end,
               double step) {
  if (!(step > 0.0)) throw InvalidInput("flow step must be positive");
  if (z.size() != model.dim()) throw InvalidInput("point has the wrong dimension");
  FlowTrace trace;
  trace.field_kind = kind;
  trace.samples.push_back({0.0, z, model.tau(z)});
  const auto n = static_cast<std::size_t>(std::ceil(std::abs(t_end) / step - 1e-12));
  if (n == 0) return trace;
  const double h = t_end / static_cast<double>(n);
  CVec w = z;
  for (std::size_t i = 1; i <= n; ++i) {
    w = flow_step(model, w, kind, h);
    if (!model.in_domain(w) || !w.allFinite()) {
      trace.left_chart = true;
      break;
    }
    trace.samples.push_back({h * static_cast<double>(i), w, model.tau(w)});
  }
  return trace;
}

std::optional<double> detect_period(const ExhaustionModel& model, const CVec& z,
                                    double max_time, double step, double tol) {
  const CVec v0 = field(model, z, FieldKind::eta);
  if (v0.norm() == 0.0) return std::nullopt;
  const double near = 1e-4 * (1.0 + z.norm());
  CVec prev = z;
  double t = 0.0;
  double g_prev = 0.0;
  while (t < max_time) {
    const CVec next = flow_step(model, prev, FieldKind::eta, step);
    if (!model.in_domain(next) || !next.allFinite()) return std::nullopt;
    const double g_next = hyperplane(next, z, v0);
    if (g_prev < 0.0 && g_next >= 0.0) {
      double lo = 0.0, hi = step;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const CVec m = flow_step(model, prev, FieldKind::eta, mid);
        (hyperplane(m, z, v0) < 0.0 ? lo : hi) = mid;
      }
      const double dt = 0.5 * (lo + hi);
      // Crossings far from z belong to other sheets of the orbit.
      if ((flow_step(model, prev, FieldKind::eta, dt) - z).norm() < near) return t + dt;
    }
    prev = next;
    g_prev = g_next;
    t += step;
  }
  return std::nullopt;
}

LeafChart::LeafChart(const ExhaustionModel& model, CVec base, double s0, double step)
    : model_(model), base_(std::move(base)), s0_(s0), u0_(std::log(model.tau(base_))), step_(step) {
  if (!(s0 > 0.0)) throw InvalidInput("leaf period must be positive");
}

CVec LeafChart::point(Complex zeta) const {
  if (zeta == 0.0) throw InvalidInput("zeta = 0 is the puncture");
  const double scale = s0_ / kTwoPi;
  const double t = -scale * std::log(std::abs(zeta)) - u0_;
  const double s = scale * std::arg(zeta);
  return flow_to(model_, flow_to(model_, base_, FieldKind::xi, t, step_), FieldKind::eta, s, step_);
}

Complex LeafChart::base_coordinate() const { return std::exp(-(kTwoPi / s0_) * u0_); }

double LeafChart::modulus_at(const CVec& z) const {
  return std::exp(-kTwoPi * std::log(model_.tau(z)) / s0_);
}

double LeafChart::cr_residual(Complex zeta, double h) const {
  h *= std::abs(zeta);
  auto diff = [&](Complex dir) {
    return CVec((8.0 * (point(zeta + dir * h) - point(zeta - dir * h)) -
                 (point(zeta + 2.0 * dir * h) - point(zeta - 2.0 * dir * h))) /
                (12.0 * h));
  };
  const CVec dx = diff(1.0);
  const CVec dy = diff(kI);
  const CVec d = 0.5 * (dx - kI * dy);
  const CVec dbar = 0.5 * (dx + kI * dy);
  return dbar.norm() / d.norm();
}

LeafChart leaf_uniformize(const ExhaustionModel& model, const CVec& z, double step) {
  const auto s0 = detect_period(model, z, 50.0, step);
  if (!s0) throw InvalidInput("eta orbit does not close: no periodic leaf");
  return LeafChart(model, z, *s0, step);
}

GrowthResult growth_test(const std::vector<GrowthSample>& samples, int N) {
  if (samples.empty()) throw InvalidInput("no growth samples");
  double tau_max = 0.0;
  for (const auto& s : samples) tau_max = std::max(tau_max, s.tau);
  if (tau_max < 1e3) throw InvalidInput("growth samples must reach tau >= 1e3");

  GrowthResult out;
  double log_sup = -std::numeric_limits<double>::infinity();
  constexpr int kBins = 10;
  std::vector<double> env(kBins, -std::numeric_limits<double>::infinity());
  std::vector<double> env_x(kBins, 0.0);
  const double lo = std::log(tau_max / 10.0), width = std::log(10.0) / kBins;
  for (const auto& s : samples) {
    const double lr = std::log(s.abs_f) - N * std::log1p(s.tau);
    if (std::isnan(lr) || lr == std::numeric_limits<double>::infinity()) {
      out.C_estimate = std::numeric_limits<double>::infinity();
      return out;
    }
    log_sup = std::max(log_sup, lr);
    if (s.tau < tau_max / 10.0) continue;
    const int b = std::min(kBins - 1, static_cast<int>((std::log(s.tau) - lo) / width));
    if (lr > env[b]) {
      env[b] = lr;
      env_x[b] = std::log1p(s.tau);
    }
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int b = 0; b < kBins; ++b) {
    if (!std::isfinite(env[b])) continue;
    sx += env_x[b], sy += env[b], sxx += env_x[b] * env_x[b], sxy += env_x[b] * env[b], ++n;
  }
  out.tail_slope = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
  out.C_estimate = std::exp(log_sup);
  out.passes = std::isfinite(out.C_estimate) && out.tail_slope <= 0.05;
  return out;
}

}  // namespace grauert::flow
