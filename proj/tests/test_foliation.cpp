#include "doctest.h"

#include <cmath>

#include "grauert/disk/verify.hpp"
#include "grauert/flow/flow.hpp"

using namespace grauert;
using namespace grauert::disk;

namespace {

HermitianModel make(ModelKind k, Complex lambda = 0.0) {
  HermitianModel m;
  m.kind = k;
  m.lambda = lambda;
  return m;
}

FoliationOptions small() {
  FoliationOptions o;
  o.n_modes = 32;
  return o;
}

}  // namespace

TEST_CASE("the chart at lambda = 0 is the identity and u vanishes on the boundary") {
  ExtremalFamily fam(make(ModelKind::quadric), small());
  const auto chart = assemble_foliation(fam, default_grid());
  CHECK(chart.disks.size() == 9);
  CHECK(chart.reports.psi_deviation < 1e-12);
  CHECK(chart.reports.max_u_boundary < 1e-10);
  CHECK(chart.reports.max_r_boundary < 1e-12);
  CHECK(chart.reports.injective);
  CHECK(chart.reports.min_leaf_separation == doctest::Approx(0.25).epsilon(1e-3));
}

TEST_CASE("potential jet at lambda = 0 matches -log h - log |t|^2") {
  const Complex z1(0.2, -0.1), t(0.3, 0.4);
  {
    ExtremalFamily fam(make(ModelKind::quadric), small());
    const auto j = fam.jet_at({z1, t});
    CHECK(j.u == doctest::Approx(std::norm(z1) - std::log(std::norm(t))).epsilon(1e-12));
    CHECK(std::abs(j.du[0] - std::conj(z1)) < 1e-8);
    CHECK(std::abs(j.du[1] + 1.0 / t) < 1e-8);
    CHECK(std::abs(j.ddbar(0, 0) - 1.0) < 1e-7);
    CHECK(std::abs(j.ddbar(0, 1)) < 1e-7);
    CHECK(std::abs(j.ddbar(1, 1)) < 1e-7);
  }
  {
    ExtremalFamily fam(make(ModelKind::plus), small());
    const auto j = fam.jet_at({z1, t});
    const double a = 1.0 + std::norm(z1);
    CHECK(j.u == doctest::Approx(-std::log(a) - std::log(std::norm(t))).epsilon(1e-12));
    CHECK(std::abs(j.du[0] + std::conj(z1) / a) < 1e-8);
    CHECK(std::abs(j.ddbar(0, 0) + 1.0 / (a * a)) < 1e-7);
  }
}

TEST_CASE("inversion recovers leaf coordinates") {
  ExtremalFamily fam(make(ModelKind::quadric, 0.05), small());
  const CVector zp{Complex(0.1, 0.05)};
  const Complex zeta(0.3, -0.5);
  const LeafPoint x = fam.invert(fam.leaf_point({zp, zeta}));
  CHECK(std::abs(x.z_prime[0] - zp[0]) < 1e-11);
  CHECK(std::abs(x.zeta - zeta) < 1e-11);
  // On a leaf u = -log |zeta|^2.
  const auto j = fam.jet(x);
  CHECK(j.u + std::log(std::norm(zeta)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(fam.invert({0.0}), InvalidInput);
  CHECK_THROWS_AS(fam.jet({zp, 0.0}), InvalidInput);
}

TEST_CASE("the deformation of the chart is linear in lambda") {
  double dev[2];
  int i = 0;
  for (double lam : {0.025, 0.05}) {
    ExtremalFamily fam(make(ModelKind::quadric, lam), small());
    const auto chart = assemble_foliation(fam, default_grid());
    CHECK(chart.reports.max_grad_norm <= 1e-10);
    CHECK(chart.reports.max_boundary_residual <= 1e-10);
    CHECK(chart.reports.max_u_boundary <= 1e-10);
    CHECK(chart.reports.injective);
    CHECK(chart.reports.max_tail_energy < 1e-10);
    dev[i++] = chart.reports.psi_deviation;
  }
  CHECK(dev[0] > 0.0);
  CHECK(dev[1] / dev[0] == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("Levi determinant of the reference models at lambda = 0") {
  {
    ExtremalFamily fam(make(ModelKind::plus), small());
    const auto s = levi_sample(fam, {0.0, 0.5});
    CHECK(std::abs(s.det) == doctest::Approx(4.0).epsilon(1e-8));
  }
  ExtremalFamily fam(make(ModelKind::quadric), small());
  const auto rep = levi_verify(fam, levi_points(default_grid()));
  CHECK(rep.sign == -1);
  for (const auto& s : rep.samples) CHECK(s.det_t2 == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK(rep.max_leaf_eig <= 1e-8);
  CHECK(rep.restricted_positive);
  CHECK(rep.passes());
}

TEST_CASE("Levi form at lambda = 0.05 keeps its sign and bounds") {
  ExtremalFamily fam(make(ModelKind::quadric, 0.05), small());
  const auto rep = levi_verify(fam, levi_points(default_grid()));
  CHECK(rep.constant_sign);
  CHECK(rep.sign == -1);
  CHECK(rep.ratio <= 2.0);
  CHECK(rep.min_restricted > 0.0);
  CHECK(rep.max_leaf_eig <= 1e-8);
}

TEST_CASE("beta tangency") {
  {
    ExtremalFamily fam(make(ModelKind::flat), small());
    CHECK(tangency_verify(fam, fam.disk({Complex(0.1, 0.1)})).residual < 1e-12);
  }
  {
    ExtremalFamily fam(make(ModelKind::plus), small());
    const auto t = tangency_verify(fam, fam.disk({0.3}));
    CHECK(t.residual <= 1e-8);
    CHECK(t.negative_mode_energy <= 1e-9);
  }
  ExtremalFamily fam(make(ModelKind::quadric, 0.05), small());
  auto leaf = fam.disk({Complex(0.0, 0.25)});
  CHECK(tangency_verify(fam, leaf).residual <= 1e-7);
  leaf.fourier[0][2] += 0.05;
  const auto bad = tangency_verify(fam, leaf);
  CHECK(bad.residual > 1e-3);
  CHECK(bad.negative_mode_energy > 1e-9);
}

TEST_CASE("the complex gradient of e^u is tangent to the leaves") {
  auto fam = std::make_shared<ExtremalFamily>(make(ModelKind::quadric, 0.05), small());
  const auto model = line_bundle_model(fam);
  const CVector zp{Complex(0.1, 0.0)};
  for (Complex zeta : {Complex(0.5, 0.0), Complex(-0.2, 0.6)}) {
    const CVector p = fam->leaf_point({zp, zeta});
    const CVector v = fam->disk(zp).derivative(zeta);
    flow::CVec z(2);
    z << p[0], p[1];
    const auto Y = flow::complex_gradient(model, z).Y;
    const double wedge = std::abs(Y(0) * v[1] - Y(1) * v[0]) / (Y.norm() * std::hypot(std::abs(v[0]), std::abs(v[1])));
    CHECK(wedge < 1e-7);
  }
}

TEST_CASE("assembly does not depend on threading or call order") {
  auto opt = small();
  ExtremalFamily a(make(ModelKind::quadric, 0.03), opt);
  opt.parallel = false;
  ExtremalFamily b(make(ModelKind::quadric, 0.03), opt);
  b.solve({Complex(0.25, 0.25)});
  const auto ca = assemble_foliation(a, default_grid());
  const auto cb = assemble_foliation(b, default_grid());
  for (std::size_t i = 0; i < ca.disks.size(); ++i) {
    CHECK(ca.E[i] == cb.E[i]);
    CHECK(ca.disks[i].fourier == cb.disks[i].fourier);
  }
}
