#include "grauert/tube/radius.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "grauert/spectral.hpp"

namespace grauert::tube {
namespace {

bool outside(const geom::JacobiFrame& f, double pole_threshold) {
  return !(f.a.imag() > 0.0) || std::abs(f.Y) < pole_threshold;
}

const char* reason_of(const geom::JacobiFrame& f, double pole_threshold) {
  return std::abs(f.Y) < pole_threshold ? "pole" : "im_a_nonpositive";
}

}  // namespace

Compactification compactification_check(const AGrid& grid, double tol) {
  if (grid.a.size() < 16) throw InvalidInput("compactification check needs at least 16 sigma samples");
  Compactification out;
  const std::size_t cols = grid.a.front().size();
  for (const auto& row : grid.a)
    if (row.size() != cols) throw InvalidInput("ragged a-grid");
  if (cols < 2) return out;

  auto row_mean = [&](std::size_t k) {
    Complex s = 0.0;
    for (const auto& row : grid.a) s += row[k];
    return s / static_cast<double>(grid.a.size());
  };
  const Complex top = row_mean(cols - 1);
  const Complex below = row_mean(cols - 2);
  double osc = 0.0;
  for (const auto& row : grid.a) osc = std::max(osc, std::abs(row[cols - 1] - top));
  out.oscillation = osc;
  out.limit_value = top;
  out.extends = osc <= tol && std::abs(top - below) <= tol;
  return out;
}

GeodesicScan scan_geodesic(const geom::SurfaceMetric& metric, int id, int n_geodesics,
                           double tau_ceiling, const ScanOptions& opt) {
  if (n_geodesics < 1) throw InvalidInput("n_geodesics must be at least 1");
  if (!(tau_ceiling > 0.0)) throw InvalidInput("tau_ceiling must be positive");
  if (opt.sigma_lines < 1 || !(opt.tau_step > 0.0)) throw InvalidInput("bad scan options");

  const double alpha = kPi * (id + 0.5) / n_geodesics;
  const auto series = geom::curvature_fourier(metric, geom::closed_geodesic(metric, alpha));
  const double top = std::min(tau_ceiling, series.tau_cert);
  const auto n_tau = static_cast<std::size_t>(std::ceil(top / opt.tau_step - 1e-9));

  GeodesicScan scan;
  scan.geodesic_id = id;
  scan.breach = {id, top, "analyticity_limit"};
  scan.breached = top < tau_ceiling;
  std::vector<std::vector<Complex>> rows;
  std::size_t good_cols = n_tau + 1;
  bool found = false;

  geom::JacobiFrame axis{};
  for (int j = 0; j < opt.sigma_lines; ++j) {
    const double sigma = kTwoPi * j / opt.sigma_lines;
    axis = geom::advance(series, axis, Complex(sigma, 0.0), opt.jacobi_step);
    std::vector<Complex> row{axis.a};
    geom::JacobiFrame f = axis;
    for (std::size_t k = 1; k <= n_tau; ++k) {
      const double tau = k == n_tau ? top : opt.tau_step * static_cast<double>(k);
      geom::JacobiFrame next = geom::advance(series, f, Complex(sigma, tau), opt.jacobi_step);
      if (outside(next, opt.pole_threshold)) {
        geom::JacobiFrame lo = f, hi = next;
        while (hi.sigma_tau.imag() - lo.sigma_tau.imag() > opt.bisect_tol) {
          const double mid = 0.5 * (lo.sigma_tau.imag() + hi.sigma_tau.imag());
          geom::JacobiFrame m = geom::advance(series, lo, Complex(sigma, mid), opt.jacobi_step);
          (outside(m, opt.pole_threshold) ? hi : lo) = m;
        }
        const double tau_b = hi.sigma_tau.imag();
        // A breach inside the scanned range always precedes the analyticity limit.
        if (!found || tau_b < scan.breach.tau) scan.breach = {id, tau_b, reason_of(hi, opt.pole_threshold)};
        found = scan.breached = true;
        good_cols = std::min(good_cols, k);
        break;
      }
      row.push_back(next.a);
      f = next;
    }
    rows.push_back(std::move(row));
  }
  scan.grid.a = std::move(rows);
  for (auto& row : scan.grid.a) row.resize(good_cols);
  for (std::size_t k = 0; k < good_cols; ++k)
    scan.grid.tau.push_back(k == n_tau ? top : opt.tau_step * static_cast<double>(k));
  return scan;
}

TubeReport tube_radius(const geom::SurfaceMetric& metric, int n_geodesics, double tau_ceiling,
                       const ScanOptions& opt) {
  if (n_geodesics < 1) throw InvalidInput("n_geodesics must be at least 1");
  std::vector<GeodesicScan> scans(static_cast<std::size_t>(n_geodesics));
  if (opt.parallel) {
    std::vector<std::future<GeodesicScan>> jobs;
    for (int i = 0; i < n_geodesics; ++i)
      jobs.push_back(std::async(std::launch::async, scan_geodesic, std::cref(metric), i,
                                n_geodesics, tau_ceiling, std::cref(opt)));
    for (int i = 0; i < n_geodesics; ++i) scans[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].get();
  } else {
    for (int i = 0; i < n_geodesics; ++i)
      scans[static_cast<std::size_t>(i)] = scan_geodesic(metric, i, n_geodesics, tau_ceiling, opt);
  }

  TubeReport report;
  report.radius_estimate = tau_ceiling;
  bool all_extend = true;
  for (const auto& s : scans) {
    if (s.breached) {
      report.per_geodesic_breach.push_back(s.breach);
      report.radius_estimate = std::min(report.radius_estimate, s.breach.tau);
    }
  }
  if (report.per_geodesic_breach.empty()) {
    for (const auto& s : scans) {
      const auto c = compactification_check(s.grid, opt.oscillation_tol);
      all_extend = all_extend && c.extends;
      if (!report.limit_value) report.limit_value = c.limit_value;
    }
    report.entire_flag = all_extend;
  }
  return report;
}

}  // namespace grauert::tube
