#include "grauert/disk/newton.hpp"

#include <cmath>

namespace grauert::disk {
namespace {

BaseVariation axpy(const BaseVariation& x, double a, const BaseVariation& y) {
  BaseVariation out = x;
  for (std::size_t c = 0; c < x.size(); ++c)
    for (std::size_t k = 0; k < x[c].size(); ++k) out[c][k] += a * y[c][k];
  return out;
}

}  // namespace

BaseVariation variation_of(const BoundaryDisk& f) {
  BaseVariation x;
  for (int c = 0; c + 1 < f.dim(); ++c) {
    CVector v = f.fourier[static_cast<std::size_t>(c)];
    v[0] = 0.0;
    x.push_back(v);
  }
  return x;
}

NewtonResult newton_disk(const HermitianModel& model, const CVector& z_prime, int n_modes,
                         const BoundaryDisk* f_init, const NewtonOptions& opt) {
  model.validate();
  BaseVariation x = f_init ? variation_of(*f_init) : zero_variation(model.base_dim(), n_modes);
  if (f_init && f_init->n_modes != n_modes) throw InvalidInput("initial disk has a different mode count");
  const double precond = -2.0 * model.center_mixed_hessian();

  NewtonResult res;
  RVector v;
  auto evaluate = [&](const BaseVariation& y) {
    auto sol = solve_boundary(model, z_prime, y, n_modes, opt.boundary, v.empty() ? nullptr : &v);
    auto g = grad_energy(model, sol.disk);
    return std::make_tuple(sol, g, variation_norm(g));
  };

  auto [sol, g, gn] = evaluate(x);
  res.grad_history.push_back(gn);
  int it = 0;
  for (; it < opt.max_iter && gn > opt.grad_tol && precond != 0.0; ++it) {
    v = sol.v;
    double alpha = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < opt.max_backtrack; ++bt, alpha *= 0.5) {
      const BaseVariation trial = axpy(x, -alpha / precond, g);
      try {
        auto [s2, g2, gn2] = evaluate(trial);
        if (gn2 < gn) {
          x = trial;
          sol = s2;
          g = g2;
          gn = gn2;
          accepted = true;
          break;
        }
      } catch (const ContractionLost&) {
        // Step too long for the boundary solve; shorten it.
      }
    }
    res.grad_history.push_back(gn);
    if (!accepted) {
      if (gn <= opt.accept_tol) break;
      throw ConvergenceFailure("newton_disk: step rejection cascade", res.grad_history);
    }
  }
  if (gn > opt.accept_tol) throw ConvergenceFailure("newton_disk: gradient tolerance not reached", res.grad_history);

  res.disk = normalize_rotation(sol.disk);
  if (!is_embedded(res.disk)) throw Error("newton_disk: extremal disk is not embedded");
  res.energy = distortion_energy(res.disk);
  res.grad_norm = gn;
  res.residual = sol.residual;
  res.iterations = it;
  res.v = sol.v;
  return res;
}

NewtonResult continue_disk(const HermitianModel& model, const CVector& z_prime, int n_modes,
                           double step, const NewtonOptions& opt) {
  if (!(step > 0.0)) throw InvalidInput("continuation step must be positive");
  HermitianModel m = model;
  m.lambda = 0.0;
  BoundaryDisk f = model_disk(m, z_prime, n_modes);
  const double target = std::abs(model.lambda);
  const Complex dir = target > 0.0 ? model.lambda / target : Complex(1.0);
  const int steps = static_cast<int>(std::ceil(target / step - 1e-12));
  NewtonResult res = newton_disk(m, z_prime, n_modes, &f, opt);
  for (int k = 1; k <= steps; ++k) {
    m.lambda = dir * (k == steps ? target : step * k);
    res = newton_disk(m, z_prime, n_modes, &res.disk, opt);
  }
  return res;
}

Eigen::MatrixXd second_variation_check(const HermitianModel& model, int k_max, int n_modes,
                                       double eps) {
  HermitianModel m = model;
  m.lambda = 0.0;
  const int nb = m.base_dim();
  const CVector z0(static_cast<std::size_t>(nb), 0.0);
  const int dim = 2 * k_max * nb;
  auto basis = [&](int idx) {
    BaseVariation e = zero_variation(nb, n_modes);
    const int c = idx / (2 * k_max), r = idx % (2 * k_max);
    e[static_cast<std::size_t>(c)][static_cast<std::size_t>(r / 2 + 1)] = (r % 2 == 0) ? Complex(1.0) : kI;
    return e;
  };
  auto grad_at = [&](const BaseVariation& x) {
    return grad_energy(m, solve_boundary(m, z0, x, n_modes).disk);
  };
  Eigen::MatrixXd J(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const BaseVariation e = basis(j);
    const BaseVariation gp = grad_at(axpy(zero_variation(nb, n_modes), eps, e));
    const BaseVariation gm = grad_at(axpy(zero_variation(nb, n_modes), -eps, e));
    for (int i = 0; i < dim; ++i) {
      const int c = i / (2 * k_max), r = i % (2 * k_max);
      const Complex d = (gp[static_cast<std::size_t>(c)][static_cast<std::size_t>(r / 2 + 1)] -
                         gm[static_cast<std::size_t>(c)][static_cast<std::size_t>(r / 2 + 1)]) / (2.0 * eps);
      J(i, j) = r % 2 == 0 ? d.real() : d.imag();
    }
  }
  return J;
}

}  // namespace grauert::disk
