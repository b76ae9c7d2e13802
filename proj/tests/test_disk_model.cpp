#include "doctest.h"

#include <cmath>

#include "grauert/disk/boundary_disk.hpp"
#include "grauert/disk/model.hpp"
#include "grauert/disk/rh.hpp"
#include "grauert/spectral.hpp"

using namespace grauert;
using namespace grauert::disk;

namespace {

HermitianModel make(ModelKind k, Complex lambda = 0.0) {
  HermitianModel m;
  m.kind = k;
  m.lambda = lambda;
  return m;
}

// d/dz = (d/dx - i d/dy) / 2 by central differences.
template <class F>
Complex dz(F f, Complex z, double h = 1e-5) {
  const double fx = (f(z + h) - f(z - h)) / (2 * h);
  const double fy = (f(z + Complex(0, h)) - f(z - Complex(0, h))) / (2 * h);
  return 0.5 * Complex(fx, -fy);
}

}  // namespace

TEST_CASE("model h matches its closed form") {
  const CVector zp{Complex(0.3, -0.2)};
  const Complex zn(0.1, 0.4);
  const double q = std::norm(zp[0]) + std::norm(zn);
  const double quad = std::exp(-q + 2.0 * std::real(zp[0] * zp[0] * zn));
  CHECK(make(ModelKind::quadric).h(zp, zn) == doctest::Approx(quad).epsilon(1e-15));
  CHECK(make(ModelKind::plus).h(zp, zn) == doctest::Approx(1.0 + std::norm(zp[0])).epsilon(1e-15));
  CHECK(make(ModelKind::flat).h(zp, zn) == 1.0);
}

TEST_CASE("center mixed Hessian by the model and by differences") {
  for (auto [k, expect] : {std::pair{ModelKind::plus, 1.0}, {ModelKind::quadric, -1.0}, {ModelKind::flat, 0.0}}) {
    const auto m = make(k);
    CHECK(m.center_mixed_hessian() == expect);
    // d^2/dz dzbar = Laplacian / 4.
    const double h = 1e-4;
    auto H = [&](Complex z) { return m.h(CVector{z}, 0.0); };
    const double lap = (H(h) + H(-h) + H(Complex(0, h)) + H(Complex(0, -h)) - 4 * H(0.0)) / (h * h);
    CHECK(lap / 4 == doctest::Approx(expect).epsilon(1e-6));
  }
}

TEST_CASE("r_base and r_t agree with differences of r") {
  const CVector zp{Complex(0.2, 0.1)};
  const Complex t(0.5, -0.3);
  for (auto k : {ModelKind::plus, ModelKind::quadric, ModelKind::flat}) {
    const auto m = make(k, 0.2);
    const Complex rl = dz([&](Complex z) { return m.r(CVector{z}, t); }, zp[0]);
    const Complex rt = dz([&](Complex s) { return m.r(zp, s); }, t);
    CHECK(std::abs(m.r_base(zp, t)[0] - rl) < 1e-9);
    CHECK(std::abs(m.r_t(zp, t) - rt) < 1e-9);
  }
}

TEST_CASE("dh agrees with differences of h") {
  const auto m = make(ModelKind::quadric);
  const CVector zp{Complex(0.2, -0.4)};
  const Complex zn(0.3, 0.1);
  const CVector g = m.dh(zp, zn);
  REQUIRE(g.size() == 2);
  CHECK(std::abs(g[0] - dz([&](Complex z) { return m.h(CVector{z}, zn); }, zp[0])) < 1e-9);
  CHECK(std::abs(g[1] - dz([&](Complex z) { return m.h(zp, z); }, zn)) < 1e-9);
}

TEST_CASE("model names and validation") {
  CHECK(model_kind_from_string("quadric-like") == ModelKind::quadric);
  CHECK(model_kind_from_string(to_string(ModelKind::plus)) == ModelKind::plus);
  CHECK_THROWS_AS(model_kind_from_string("sphere"), InvalidInput);
  HermitianModel m;
  m.dim = 1;
  CHECK_THROWS_AS(m.validate(), InvalidInput);
}

TEST_CASE("model disk lies on r = 1 and is normalized") {
  for (auto k : {ModelKind::plus, ModelKind::quadric, ModelKind::flat}) {
    const auto m = make(k);
    const CVector zp{Complex(0.25, -0.1)};
    const auto f = model_disk(m, zp, 32);
    CHECK(boundary_residual(m, f) < 1e-14);
    CHECK(f.fn_derivative_at_zero().real() == doctest::Approx(1.0 / std::sqrt(m.h(zp, 0.0))));
    CHECK(f.fn_derivative_at_zero().imag() == 0.0);
    CHECK(is_embedded(f));
    const auto p = f.eval(Complex(0.3, 0.4));
    CHECK(std::abs(p[0] - zp[0]) < 1e-15);
  }
}

TEST_CASE("grid size") {
  CHECK(grid_size(64) == 256);
  CHECK(grid_size(1) == 16);
  CHECK(grid_size(5) == 32);
}

TEST_CASE("series evaluation and derivatives of a disk") {
  BoundaryDisk f;
  f.n_modes = 4;
  f.z_prime = {0.1};
  f.fourier = {{0.1, 0.5, 0.0, 0.2, 0.0}, {0.0, 1.0, 0.3, 0.0, 0.0}};
  const Complex z(0.3, -0.2);
  CHECK(std::abs(f.eval(z)[0] - (0.1 + 0.5 * z + 0.2 * z * z * z)) < 1e-15);
  CHECK(std::abs(f.derivative(z)[1] - (1.0 + 0.6 * z)) < 1e-15);
  CHECK(std::abs(f.second_derivative(z)[0] - 1.2 * z) < 1e-15);
  const auto b = f.boundary(1, 16);
  CHECK(std::abs(b[4] - (Complex(0, 1) - 0.3)) < 1e-15);
}

TEST_CASE("rotation normalization and embeddedness failures") {
  BoundaryDisk f;
  f.n_modes = 4;
  f.z_prime = {0.0};
  f.fourier = {{0.0, 0.2, 0.0, 0.0, 0.0}, {0.0, Complex(0.0, 2.0), 0.0, 0.0, 0.0}};
  const auto g = normalize_rotation(f);
  CHECK(std::abs(g.fn_derivative_at_zero() - 2.0) < 1e-15);
  CHECK(std::abs(g.fourier[0][1] - Complex(0.0, -0.2)) < 1e-15);

  BoundaryDisk w = f;
  w.fourier[1] = {0.0, 0.0, 1.0, 0.0, 0.0};  // f_n = zeta^2 winds twice
  CHECK_FALSE(is_embedded(w));
}

TEST_CASE("RH factorization recovers a known factorization") {
  const std::size_t m = 256;
  const double th0 = 0.3;
  CVector phi(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Complex z = std::polar(1.0, kTwoPi * j / m);
    const double rho = 2.0 + std::cos(kTwoPi * j / m);
    phi[j] = rho * std::polar(1.0, th0) * (1.0 + 0.3 * z);
  }
  const auto rh = rh_factorize(phi);
  CHECK(rh.theta0 == doctest::Approx(th0).epsilon(1e-12));
  CHECK(std::abs(rh.g_fourier[0] - std::polar(1.0, th0)) < 1e-12);
  CHECK(std::abs(rh.g_fourier[1] - 0.3 * std::polar(1.0, th0)) < 1e-12);
  double err = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    err = std::max(err, std::abs(rh.rho_boundary[j] - (2.0 + std::cos(kTwoPi * j / m))));
    err = std::max(err, std::abs(rh.rho_boundary[j] * rh.g_boundary[j] - phi[j]));
  }
  CHECK(err < 1e-12);
}

TEST_CASE("RH factorization on a model disk is grid independent") {
  const auto m = make(ModelKind::quadric, 0.1);
  const auto f = model_disk(m, {Complex(0.2, 0.1)}, 64);
  auto phi = [&](std::size_t n) {
    CVector p(n);
    const auto b0 = f.boundary(0, n), b1 = f.boundary(1, n);
    for (std::size_t j = 0; j < n; ++j) p[j] = std::polar(1.0, kTwoPi * j / n) * m.r_t({b0[j]}, b1[j]);
    return p;
  };
  const auto a = rh_factorize(phi(256)), b = rh_factorize(phi(512));
  CHECK(std::abs(std::abs(a.g_fourier[0]) - 1.0) < 1e-10);
  CHECK(a.theta0 == doctest::Approx(b.theta0).epsilon(1e-9));
  for (std::size_t j = 0; j < 256; ++j) CHECK(std::abs(a.rho_boundary[j] - b.rho_boundary[2 * j]) < 1e-9);
  for (std::size_t k = 0; k < 16; ++k) CHECK(std::abs(a.g_fourier[k] - b.g_fourier[k]) < 1e-9);
}

TEST_CASE("RH factorization rejects winding") {
  CVector phi(64);
  for (std::size_t j = 0; j < 64; ++j) phi[j] = std::polar(1.0, kTwoPi * j / 64);
  CHECK_THROWS_AS(rh_factorize(phi), WindingError);
}
