#include "doctest.h"

#include <fstream>
#include <sstream>

#include "grauert/io/report_io.hpp"

using namespace grauert;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "grauert_test_io";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

disk::FoliationChart tiny_chart() {
  disk::HermitianModel m;
  m.lambda = 0.05;
  disk::FoliationOptions o;
  o.n_modes = 16;
  disk::ExtremalFamily fam(m, o);
  return disk::assemble_foliation(fam, {{Complex(0.0, 0.0)}, {Complex(0.1, -0.1)}});
}

}  // namespace

TEST_CASE("complex values round trip") {
  const Complex z(0.1, -1.0 / 3.0);
  CHECK(io::complex_from_json(io::to_json(z)) == z);
  const CVector v{z, 2.0, Complex(0, 1e-300)};
  CHECK(io::cvector_from_json(io::to_json(v)) == v);
  CHECK_THROWS_AS(io::complex_from_json(io::Json::array({1.0})), InvalidInput);
}

TEST_CASE("chart JSON round trips exactly") {
  const auto chart = tiny_chart();
  const auto j = io::to_json(chart);
  CHECK(j["schema"] == 1);
  CHECK(j["grid"].size() == 2);
  const auto back = io::chart_from_json(io::Json::parse(j.dump()));
  CHECK(back.model.kind == chart.model.kind);
  CHECK(back.model.lambda == chart.model.lambda);
  CHECK(back.disks[1].fourier == chart.disks[1].fourier);
  CHECK(back.disks[1].z_prime == chart.disks[1].z_prime);
  CHECK(io::to_json(back) == j);

  auto bad = j;
  bad["schema"] = 2;
  CHECK_THROWS_AS(io::chart_from_json(bad), InvalidInput);
}

TEST_CASE("tube report JSON") {
  tube::TubeReport r;
  r.radius_estimate = 0.5;
  r.per_geodesic_breach.push_back({3, 0.5, "im_a_nonpositive"});
  const auto j = io::to_json(r, geom::SurfaceMetric::zoll(0.2));
  CHECK(j["schema"] == 1);
  CHECK(j["metric"]["kind"] == "zoll");
  CHECK(j["limit_value"].is_null());
  CHECK(j["per_geodesic_breach"][0]["geodesic_id"] == 3);
  r.radius_estimate = std::numeric_limits<double>::infinity();
  r.limit_value = Complex(0, 1);
  const auto k = io::to_json(r, geom::SurfaceMetric::round_sphere());
  CHECK(k["radius_estimate"].is_null());
  CHECK(k["limit_value"][1] == 1.0);
}

TEST_CASE("atomic writes and sidecars") {
  const auto p = scratch("nested/dir/report.json");
  fs::remove_all(p.parent_path());
  io::write_json(p, {{"a", 1}});
  CHECK(io::read_json(p)["a"] == 1);
  CHECK_FALSE(fs::exists(p.string() + ".tmp"));
  io::write_atomic(p, "{\"a\": 2}");
  CHECK(io::read_json(p)["a"] == 2);
  CHECK(io::sidecar_path(p).filename() == "report.json.meta.json");
  io::write_sidecar(p, {{"seconds", 1.5}});
  CHECK(fs::exists(io::sidecar_path(p)));
  CHECK_THROWS_AS(io::read_json(scratch("missing.json")), InvalidInput);
  io::write_atomic(scratch("broken.json"), "{");
  CHECK_THROWS_AS(io::read_json(scratch("broken.json")), InvalidInput);
}

TEST_CASE("leaf trace CSV") {
  const auto f = disk::model_disk(disk::HermitianModel{}, {Complex(0.2, 0.0)}, 16);
  const auto csv = io::leaf_trace_csv(f, 8);
  std::istringstream in(csv);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "theta,re_f1,im_f1,re_f2,im_f2");
  double th, a, b, c, d;
  char comma;
  std::istringstream row(first);
  row >> th >> comma >> a >> comma >> b >> comma >> c >> comma >> d;
  const auto p = f.eval(1.0);
  CHECK(th == 0.0);
  CHECK(a == p[0].real());
  CHECK(c == p[1].real());
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
}

TEST_CASE("flow trace CSV") {
  flow::FlowTrace t;
  flow::CVec z(2);
  z << Complex(1, 2), Complex(3, 4);
  t.samples.push_back({0.0, z, 30.0});
  const auto csv = io::flow_trace_csv(t);
  CHECK(csv == "t,tau,re_z1,im_z1,re_z2,im_z2\n0,30,1,2,3,4\n");
}
