#include "doctest.h"

#include <cmath>

#include "grauert/geom/jacobi.hpp"

using namespace grauert;
using namespace grauert::geom;

TEST_CASE("great circles close after one period") {
  const auto m = SurfaceMetric::round_sphere();
  for (double alpha : {0.0, 0.4, 1.2}) {
    auto traj = integrate_geodesic(m, equatorial_start(m, alpha), kTwoPi, 1e-3);
    CHECK(closure_defect(traj) < 1e-9);
  }
}

TEST_CASE("flat geodesics are straight lines") {
  const auto m = SurfaceMetric::flat();
  auto traj = integrate_geodesic(m, equatorial_start(m, 0.3), 2.0, 0.1);
  const auto& end = traj.back();
  CHECK(end.position[0] == doctest::Approx(2.0 * std::sin(0.3)).epsilon(1e-14));
  CHECK(end.position[1] == doctest::Approx(2.0 * std::cos(0.3)).epsilon(1e-14));
  CHECK(end.velocity[0] == std::sin(0.3));
}

TEST_CASE("invalid geodesic input is rejected") {
  const auto m = SurfaceMetric::round_sphere();
  CHECK_THROWS_AS(integrate_geodesic(m, equatorial_start(m, 0.1), 1.0, 0.0), InvalidInput);
  GeodesicState slow{{kPi / 2, 0.0}, {0.5, 0.0}, 0.0};
  CHECK_THROWS_AS(integrate_geodesic(m, slow, 1.0, 0.01), InvalidInput);
  CHECK_THROWS_AS(SurfaceMetric::zoll(1.0), InvalidInput);
}

TEST_CASE("zoll geodesics close and the integrator has fourth order") {
  const auto m = SurfaceMetric::zoll(0.3);
  const double alpha = 0.9;
  auto fine = integrate_geodesic(m, equatorial_start(m, alpha), kTwoPi, 1e-4);
  CHECK(closure_defect(fine) <= 1e-7);

  // Step-halving: error against the fine run must drop by about 2^4.
  auto end_error = [&](double h) {
    auto t = integrate_geodesic(m, equatorial_start(m, alpha), kTwoPi, h);
    return std::hypot(t.back().position[0] - fine.back().position[0],
                      t.back().position[1] - fine.back().position[1]);
  };
  const double e1 = end_error(0.02), e2 = end_error(0.01);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.15));

  for (const auto& s : fine) {
    CHECK(std::abs(m.norm2(s.position, s.velocity) - 1.0) < 1e-10);
    CHECK(std::abs(m.clairaut(s.position, s.velocity) - std::cos(alpha)) < 1e-10);
  }
}

TEST_CASE("zoll with zero amplitude has the round curvature samples") {
  auto round = closed_geodesic(SurfaceMetric::round_sphere(), 0.7, 1024);
  auto zoll = closed_geodesic(SurfaceMetric::zoll(0.0), 0.7, 1024);
  for (std::size_t j = 0; j < round.size(); ++j)
    CHECK(SurfaceMetric::round_sphere().curvature(round[j].position) ==
          SurfaceMetric::zoll(0.0).curvature(zoll[j].position));
}

TEST_CASE("curvature series of constant curvature surfaces") {
  const auto m = SurfaceMetric::round_sphere();
  auto s = curvature_fourier(m, closed_geodesic(m, 0.3, 4096));
  CHECK(s.kmax == 0);
  CHECK(std::abs(s.coeff(0) - 1.0) < 1e-12);
  CHECK(std::isinf(s.tau_cert));

  const auto f = SurfaceMetric::flat();
  auto sf = curvature_fourier(f, closed_geodesic(f, 0.3, 256));
  CHECK(std::abs(sf.coeff(0)) == 0.0);
  CHECK(std::isinf(sf.tau_cert));
}

TEST_CASE("zoll curvature coefficients decay exponentially") {
  const auto m = SurfaceMetric::zoll(0.3);
  auto s = curvature_fourier(m, closed_geodesic(m, 0.9));
  REQUIRE(s.kmax >= 4);
  // Oracle: least-squares line through log|c_k| computed here.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int k = 1; k <= s.kmax; ++k) {
    const double y = std::log(std::abs(s.coeff(k)));
    sx += k, sy += y, sxx += k * k, sxy += k * y, ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope < 0.0);
  for (int k = 1; k <= s.kmax; ++k) CHECK(std::abs(s.coeff(-k) - std::conj(s.coeff(k))) < 1e-15);
  CHECK(s.tau_cert > 0.0);
  CHECK(s.tau_cert < s.decay_rate);

  CHECK_THROWS_AS(curvature_fourier(m, integrate_geodesic(m, equatorial_start(m, 0.9), 3.0,
                                                          3.0 / 1024)),
                  InvalidInput);
}

TEST_CASE("round sphere jacobi ratio is tan z") {
  const auto m = SurfaceMetric::round_sphere();
  auto s = curvature_fourier(m, closed_geodesic(m, 0.2, 1024));
  auto f = jacobi_at(s, Complex(0.0, 1.0));
  CHECK(std::abs(f.a - Complex(0.0, std::tanh(1.0))) < 1e-10);
  CHECK(std::abs(f.a.imag() - 0.76159415595576) < 1e-10);

  const double sigma = kPi / 2 - 0.01;
  auto g = frame_on_axis(s, sigma);
  CHECK(std::abs(g.a - std::tan(sigma)) / std::tan(sigma) < 1e-9);

  auto line = continue_jacobi(s, frame_on_axis(s, 1.0), 2.0, 1e-3);
  for (const auto& fr : line) {
    CHECK(std::abs(fr.a - std::tan(fr.sigma_tau)) < 1e-9);
    CHECK(std::abs(fr.wronskian() - 1.0) < 1e-9);
  }
}

TEST_CASE("flat jacobi ratio is z") {
  const auto m = SurfaceMetric::flat();
  auto s = curvature_fourier(m, closed_geodesic(m, 0.2, 256));
  const Complex z(2.5, 1.3);
  auto f = jacobi_at(s, z);
  CHECK(std::abs(f.a - z) < 1e-12);
  CHECK(f.a.imag() == doctest::Approx(1.3));
}

TEST_CASE("zoll continuation is path independent and conserves the wronskian") {
  const auto m = SurfaceMetric::zoll(0.2);
  auto s = curvature_fourier(m, closed_geodesic(m, 0.5));
  const Complex z(1.3, 0.8 * s.tau_cert);
  auto a = jacobi_at(s, z, 1e-3, false);
  auto b = jacobi_at(s, z, 1e-3, true);
  CHECK(std::abs(a.a - b.a) < 1e-8);
  CHECK(std::abs(a.wronskian() - 1.0) < 1e-9);
}

TEST_CASE("zoll ratio converges linearly to the round one") {
  const Complex z(0.7, 0.2);
  const Complex round = std::tan(z);
  double prev = 0.0;
  for (double eps : {0.04, 0.02, 0.01}) {
    const auto m = SurfaceMetric::zoll(eps);
    auto s = curvature_fourier(m, closed_geodesic(m, 0.5));
    const double d = std::abs(jacobi_at(s, z).a - round);
    if (prev > 0.0) CHECK(prev / d == doctest::Approx(2.0).epsilon(0.1));
    prev = d;
  }
}
