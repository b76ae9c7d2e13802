#include "grauert/disk/foliation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <future>
#include <limits>

namespace grauert::disk {
namespace {

using Key = std::vector<std::pair<double, double>>;

Key key_of(const CVector& z) {
  Key k;
  for (const auto& c : z) k.emplace_back(c.real(), c.imag());
  return k;
}

double distance(const CVector& a, const CVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// Complex n-vector -> real 2n-vector (re, im interleaved).
Eigen::VectorXd split(const CVector& v) {
  Eigen::VectorXd r(2 * static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    r(2 * static_cast<Eigen::Index>(i)) = v[i].real();
    r(2 * static_cast<Eigen::Index>(i) + 1) = v[i].imag();
  }
  return r;
}

CVector axpy(const CVector& x, Complex a, const CVector& y) {
  CVector r = x;
  for (std::size_t i = 0; i < x.size(); ++i) r[i] += a * y[i];
  return r;
}

// Fourth-order central first and second differences from samples at
// offsets -2h, -h, 0, h, 2h.
CVector first_diff(const CVector& m2, const CVector& m1, const CVector& p1, const CVector& p2, double h) {
  CVector r(m2.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (8.0 * (p1[i] - m1[i]) - (p2[i] - m2[i])) / (12.0 * h);
  return r;
}

CVector second_diff(const CVector& m2, const CVector& m1, const CVector& c, const CVector& p1,
                    const CVector& p2, double h) {
  CVector r(c.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (-p2[i] + 16.0 * p1[i] - 30.0 * c[i] + 16.0 * m1[i] - m2[i]) / (12.0 * h * h);
  return r;
}

}  // namespace

double tail_energy(const BoundaryDisk& f) {
  double e = 0.0;
  for (const auto& c : f.fourier)
    for (std::size_t k = 3 * c.size() / 4; k < c.size(); ++k) e += std::norm(c[k]);
  return e;
}

struct ExtremalFamily::MapDerivatives {
  CVector f, fprime;
  Eigen::MatrixXd J;
  std::vector<Eigen::MatrixXd> H;  // per real output component
};

ExtremalFamily::ExtremalFamily(HermitianModel model, FoliationOptions opt)
    : model_(std::move(model)), opt_(std::move(opt)) {
  model_.validate();
}

std::size_t ExtremalFamily::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

NewtonResult ExtremalFamily::solve(const CVector& z_prime) {
  const Key key = key_of(z_prime);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  // Warm starts come from a fixed lattice of anchors reached by continuation,
  // so every disk is a deterministic function of z' regardless of call order.
  constexpr double kAnchor = 0.05;
  CVector anchor = z_prime;
  for (auto& c : anchor) c = {kAnchor * std::round(c.real() / kAnchor), kAnchor * std::round(c.imag() / kAnchor)};
  NewtonResult res;
  if (key_of(anchor) == key) {
    res = continue_disk(model_, z_prime, opt_.n_modes, opt_.lambda_step, opt_.newton);
  } else {
    const NewtonResult warm = solve(anchor);
    res = newton_disk(model_, z_prime, opt_.n_modes, &warm.disk, opt_.newton);
  }
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(res)).first->second;
}

void ExtremalFamily::insert(const NewtonResult& r) {
  std::lock_guard lock(mutex_);
  cache_.insert_or_assign(key_of(r.disk.z_prime), r);
}

CVector ExtremalFamily::leaf_point(const LeafPoint& x) { return disk(x.z_prime).eval(x.zeta); }

CVector ExtremalFamily::psi(const CVector& z_prime, Complex t) {
  return leaf_point({z_prime, std::sqrt(model_.h(z_prime, 0.0)) * t});
}

ExtremalFamily::MapDerivatives ExtremalFamily::derivatives(const LeafPoint& x, bool second) {
  const auto nb = x.z_prime.size();
  const auto n = nb + 1;
  const auto N2 = static_cast<Eigen::Index>(2 * n);
  const double h = opt_.fd_step;
  MapDerivatives d;
  const BoundaryDisk center = disk(x.z_prime);
  d.f = center.eval(x.zeta);
  d.fprime = center.derivative(x.zeta);
  d.J = Eigen::MatrixXd::Zero(N2, N2);
  d.H.assign(static_cast<std::size_t>(N2), Eigen::MatrixXd::Zero(N2, N2));
  auto put_second = [&](Eigen::Index a, Eigen::Index b, const CVector& w) {
    const Eigen::VectorXd r = split(w);
    for (Eigen::Index k = 0; k < N2; ++k) {
      d.H[static_cast<std::size_t>(k)](a, b) = r(k);
      d.H[static_cast<std::size_t>(k)](b, a) = r(k);
    }
  };

  const Eigen::Index zr = N2 - 2, zi = N2 - 1;
  d.J.col(zr) = split(d.fprime);
  d.J.col(zi) = split(axpy(CVector(n, 0.0), kI, d.fprime));
  if (second) {
    const CVector fpp = center.second_derivative(x.zeta);
    put_second(zr, zr, fpp);
    put_second(zr, zi, axpy(CVector(n, 0.0), kI, fpp));
    put_second(zi, zi, axpy(CVector(n, 0.0), -1.0, fpp));
  }

  auto direction = [&](Eigen::Index s) {
    CVector e(nb, 0.0);
    e[static_cast<std::size_t>(s / 2)] = (s % 2 == 0) ? Complex(1.0) : kI;
    return e;
  };
  const auto nbr = static_cast<Eigen::Index>(2 * nb);
  for (Eigen::Index s = 0; s < nbr; ++s) {
    const CVector e = direction(s);
    std::vector<BoundaryDisk> disks;
    for (double k : {-2.0, -1.0, 1.0, 2.0}) disks.push_back(disk(axpy(x.z_prime, k * h, e)));
    std::vector<CVector> val, der;
    for (const auto& D : disks) {
      val.push_back(D.eval(x.zeta));
      der.push_back(D.derivative(x.zeta));
    }
    d.J.col(s) = split(first_diff(val[0], val[1], val[2], val[3], h));
    if (!second) continue;
    put_second(s, s, second_diff(val[0], val[1], d.f, val[2], val[3], h));
    const CVector dfp = first_diff(der[0], der[1], der[2], der[3], h);
    put_second(s, zr, dfp);
    put_second(s, zi, axpy(CVector(n, 0.0), kI, dfp));
  }
  if (second) {
    for (Eigen::Index s1 = 0; s1 < nbr; ++s1)
      for (Eigen::Index s2 = s1 + 1; s2 < nbr; ++s2) {
        const CVector e1 = direction(s1), e2 = direction(s2);
        auto mixed = [&](double step) {
          CVector acc(n, 0.0);
          for (double a : {-1.0, 1.0})
            for (double b : {-1.0, 1.0}) {
              const CVector v = disk(axpy(axpy(x.z_prime, a * step, e1), b * step, e2)).eval(x.zeta);
              acc = axpy(acc, a * b / (4.0 * step * step), v);
            }
          return acc;
        };
        const CVector dh = mixed(h), d2h = mixed(2.0 * h);
        CVector w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = (4.0 * dh[i] - d2h[i]) / 3.0;
        put_second(s1, s2, w);
      }
  }
  return d;
}

LeafPoint ExtremalFamily::invert(const CVector& p, const LeafPoint* guess, double tol) {
  const auto n = p.size();
  if (static_cast<int>(n) != model_.dim) throw InvalidInput("point has the wrong dimension");
  LeafPoint x;
  if (guess) {
    x = *guess;
  } else {
    x.z_prime.assign(p.begin(), p.end() - 1);
    x.zeta = std::sqrt(model_.h(x.z_prime, 0.0)) * p.back();
  }
  RVector history;
  for (int it = 0; it < 40; ++it) {
    const CVector F = axpy(leaf_point(x), -1.0, p);
    double err = 0.0;
    for (const auto& v : F) err = std::max(err, std::abs(v));
    history.push_back(err);
    if (err <= tol) return x;
    const auto d = derivatives(x, false);
    const Eigen::VectorXd dx = d.J.partialPivLu().solve(-split(F));
    for (std::size_t i = 0; i + 1 < n; ++i)
      x.z_prime[i] += Complex(dx(2 * static_cast<Eigen::Index>(i)), dx(2 * static_cast<Eigen::Index>(i) + 1));
    x.zeta += Complex(dx(dx.size() - 2), dx(dx.size() - 1));
  }
  throw ConvergenceFailure("leaf inversion did not converge", history);
}

PotentialJet ExtremalFamily::jet(const LeafPoint& x) {
  if (x.zeta == 0.0) throw InvalidInput("u_lambda is singular on the divisor");
  const auto d = derivatives(x, true);
  const Eigen::Index N2 = d.J.rows();
  const Eigen::MatrixXd Jinv = d.J.inverse();

  // U = -log |zeta|^2 in the source coordinates.
  const double xi = x.zeta.real(), eta = x.zeta.imag(), r2 = std::norm(x.zeta);
  Eigen::RowVectorXd dU = Eigen::RowVectorXd::Zero(N2);
  dU(N2 - 2) = -2.0 * xi / r2;
  dU(N2 - 1) = -2.0 * eta / r2;
  Eigen::MatrixXd d2U = Eigen::MatrixXd::Zero(N2, N2);
  d2U(N2 - 2, N2 - 2) = -2.0 / r2 + 4.0 * xi * xi / (r2 * r2);
  d2U(N2 - 1, N2 - 1) = -2.0 / r2 + 4.0 * eta * eta / (r2 * r2);
  d2U(N2 - 2, N2 - 1) = d2U(N2 - 1, N2 - 2) = 4.0 * xi * eta / (r2 * r2);

  const Eigen::RowVectorXd du = dU * Jinv;
  Eigen::MatrixXd M = d2U;
  for (Eigen::Index k = 0; k < N2; ++k) M -= du(k) * d.H[static_cast<std::size_t>(k)];
  const Eigen::MatrixXd D2 = Jinv.transpose() * M * Jinv;

  const Eigen::Index n = N2 / 2;
  PotentialJet j;
  j.u = -std::log(r2);
  j.point = d.f;
  j.leaf_tangent = d.fprime;
  j.du.resize(static_cast<std::size_t>(n));
  j.ddbar.resize(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    j.du[static_cast<std::size_t>(a)] = 0.5 * Complex(du(2 * a), -du(2 * a + 1));
    for (Eigen::Index b = 0; b < n; ++b)
      j.ddbar(a, b) = 0.25 * Complex(D2(2 * a, 2 * b) + D2(2 * a + 1, 2 * b + 1),
                                     D2(2 * a, 2 * b + 1) - D2(2 * a + 1, 2 * b));
  }
  return j;
}

PotentialJet ExtremalFamily::jet_at(const CVector& p) { return jet(invert(p)); }

flow::LineBundleModel line_bundle_model(std::shared_ptr<ExtremalFamily> family) {
  const int n = family->model().dim;
  return flow::LineBundleModel(
      n,
      [family](const flow::CVec& z) {
        CVector p(static_cast<std::size_t>(z.size()));
        for (Eigen::Index i = 0; i < z.size(); ++i) p[static_cast<std::size_t>(i)] = z(i);
        const PotentialJet j = family->jet_at(p);
        flow::LogPotential out;
        out.u = j.u;
        out.du = Eigen::Map<const flow::CVec>(j.du.data(), static_cast<Eigen::Index>(j.du.size()));
        out.ddbar = j.ddbar;
        return out;
      },
      [](const flow::CVec& z) { return std::abs(z(z.size() - 1)) > 0.0; });
}

std::vector<CVector> default_grid(int base_dim) {
  std::vector<CVector> g;
  for (double im : {-0.25, 0.0, 0.25})
    for (double re : {-0.25, 0.0, 0.25}) {
      CVector z(static_cast<std::size_t>(base_dim), 0.0);
      z[0] = Complex(re, im);
      g.push_back(z);
    }
  return g;
}

FoliationChart assemble_foliation(ExtremalFamily& family, const std::vector<CVector>& grid) {
  const auto& model = family.model();
  const bool par = family.options().parallel;
  FoliationChart chart;
  chart.model = model;
  chart.n_modes = family.options().n_modes;
  chart.grid = grid;

  std::vector<NewtonResult> sols(grid.size());
  if (par) {
    std::vector<std::future<NewtonResult>> jobs;
    for (const auto& z : grid) jobs.push_back(std::async(std::launch::async, [&family, z] { return family.solve(z); }));
    for (std::size_t i = 0; i < grid.size(); ++i) sols[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) sols[i] = family.solve(grid[i]);
  }
  auto& rep = chart.reports;
  for (const auto& s : sols) {
    chart.disks.push_back(s.disk);
    chart.E.push_back(s.energy);
    chart.grad_norm.push_back(s.grad_norm);
    chart.residual.push_back(s.residual);
    rep.max_grad_norm = std::max(rep.max_grad_norm, s.grad_norm);
    rep.max_boundary_residual = std::max(rep.max_boundary_residual, s.residual);
    rep.max_tail_energy = std::max(rep.max_tail_energy, tail_energy(s.disk));
  }

  // Boundary values of u_lambda through the inversion, per leaf.
  auto boundary_check = [&family, &model](const BoundaryDisk& f) {
    std::pair<double, double> out{0.0, 0.0};
    for (int k = 0; k < 8; ++k) {
      const CVector p = f.eval(std::polar(1.0, kTwoPi * k / 8.0 + 0.1));
      const LeafPoint x = family.invert(p);
      out.first = std::max(out.first, std::abs(std::log(std::norm(x.zeta))));
      CVector zp(p.begin(), p.end() - 1);
      out.second = std::max(out.second, std::abs(model.r(zp, p.back()) - 1.0));
    }
    return out;
  };
  std::vector<std::pair<double, double>> bvals(grid.size());
  if (par) {
    std::vector<std::future<std::pair<double, double>>> jobs;
    for (const auto& f : chart.disks) jobs.push_back(std::async(std::launch::async, boundary_check, std::cref(f)));
    for (std::size_t i = 0; i < grid.size(); ++i) bvals[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) bvals[i] = boundary_check(chart.disks[i]);
  }
  for (const auto& [u, r] : bvals) {
    rep.max_u_boundary = std::max(rep.max_u_boundary, u);
    rep.max_r_boundary = std::max(rep.max_r_boundary, r);
  }

  std::vector<std::vector<CVector>> samples(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double s = std::sqrt(model.h(grid[g], 0.0));
    for (double rad : {0.25, 0.5, 0.75, 1.0})
      for (int k = 0; k < 16; ++k) {
        const Complex zeta = std::polar(rad, kTwoPi * k / 16.0);
        const CVector p = chart.disks[g].eval(zeta);
        samples[g].push_back(p);
        CVector id = grid[g];
        id.push_back(zeta / s);
        rep.psi_deviation = std::max(rep.psi_deviation, distance(p, id));
      }
  }
  rep.min_leaf_separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = a + 1; b < grid.size(); ++b)
      for (const auto& p : samples[a])
        for (const auto& q : samples[b]) rep.min_leaf_separation = std::min(rep.min_leaf_separation, distance(p, q));
  rep.injective = rep.min_leaf_separation > 1e-6;
  if (grid.size() < 2) rep.min_leaf_separation = 0.0;
  return chart;
}

}  // namespace grauert::disk
