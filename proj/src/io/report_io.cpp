#include "grauert/io/report_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace grauert::io {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const CVector& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

CVector cvector_from_json(const Json& j) {
  CVector v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

Json to_json(const geom::SurfaceMetric& m) {
  const char* kind = m.kind == geom::MetricKind::RoundSphere ? "round"
                     : m.kind == geom::MetricKind::Flat      ? "flat"
                                                             : "zoll";
  return {{"kind", kind}, {"zoll_eps", m.zoll_eps}, {"period", m.period}};
}

Json to_json(const tube::TubeReport& r, const geom::SurfaceMetric& m) {
  Json breaches = Json::array();
  for (const auto& b : r.per_geodesic_breach)
    breaches.push_back({{"geodesic_id", b.geodesic_id}, {"tau", b.tau}, {"reason", b.reason}});
  Json j = {{"schema", kSchema},
            {"metric", to_json(m)},
            {"radius_estimate", std::isfinite(r.radius_estimate) ? Json(r.radius_estimate) : Json(nullptr)},
            {"entire_flag", r.entire_flag},
            {"limit_value", r.limit_value ? to_json(*r.limit_value) : Json(nullptr)},
            {"per_geodesic_breach", breaches}};
  return j;
}

Json to_json(const disk::HermitianModel& m) {
  return {{"kind", disk::to_string(m.kind)}, {"dim", m.dim}, {"lambda", to_json(m.lambda)}, {"kappa", m.kappa}};
}

disk::HermitianModel model_from_json(const Json& j) {
  disk::HermitianModel m;
  m.kind = disk::model_kind_from_string(j.at("kind").get<std::string>());
  m.dim = j.at("dim").get<int>();
  m.lambda = complex_from_json(j.at("lambda"));
  m.kappa = j.at("kappa").get<double>();
  m.validate();
  return m;
}

Json to_json(const disk::FoliationChart& c) {
  Json grid = Json::array();
  for (std::size_t i = 0; i < c.disks.size(); ++i) {
    Json fourier = Json::array();
    for (const auto& comp : c.disks[i].fourier) fourier.push_back(to_json(comp));
    grid.push_back({{"z_prime", to_json(c.grid[i])},
                    {"fourier", fourier},
                    {"E", c.E[i]},
                    {"grad_norm", c.grad_norm[i]},
                    {"residual", c.residual[i]}});
  }
  const auto& r = c.reports;
  Json reports = {{"max_grad_norm", r.max_grad_norm},
                  {"max_boundary_residual", r.max_boundary_residual},
                  {"max_u_boundary", r.max_u_boundary},
                  {"max_r_boundary", r.max_r_boundary},
                  {"psi_deviation", r.psi_deviation},
                  {"min_leaf_separation", r.min_leaf_separation},
                  {"injective", r.injective},
                  {"max_tail_energy", r.max_tail_energy}};
  return {{"schema", kSchema},
          {"lambda", to_json(c.model.lambda)},
          {"model", to_json(c.model)},
          {"n_modes", c.n_modes},
          {"grid", grid},
          {"reports", reports}};
}

disk::FoliationChart chart_from_json(const Json& j) {
  if (j.value("schema", 0) != kSchema) throw InvalidInput("unsupported chart schema");
  disk::FoliationChart c;
  c.model = model_from_json(j.at("model"));
  c.n_modes = j.at("n_modes").get<int>();
  for (const auto& g : j.at("grid")) {
    disk::BoundaryDisk f;
    f.z_prime = cvector_from_json(g.at("z_prime"));
    f.lambda = c.model.lambda;
    f.n_modes = c.n_modes;
    for (const auto& comp : g.at("fourier")) f.fourier.push_back(cvector_from_json(comp));
    if (static_cast<int>(f.fourier.size()) != c.model.dim) throw InvalidInput("disk dimension mismatch");
    c.grid.push_back(f.z_prime);
    c.disks.push_back(std::move(f));
    c.E.push_back(g.at("E").get<double>());
    c.grad_norm.push_back(g.at("grad_norm").get<double>());
    c.residual.push_back(g.at("residual").get<double>());
  }
  const auto& r = j.at("reports");
  auto& o = c.reports;
  o.max_grad_norm = r.at("max_grad_norm").get<double>();
  o.max_boundary_residual = r.at("max_boundary_residual").get<double>();
  o.max_u_boundary = r.at("max_u_boundary").get<double>();
  o.max_r_boundary = r.at("max_r_boundary").get<double>();
  o.psi_deviation = r.at("psi_deviation").get<double>();
  o.min_leaf_separation = r.at("min_leaf_separation").get<double>();
  o.injective = r.at("injective").get<bool>();
  o.max_tail_energy = r.at("max_tail_energy").get<double>();
  return c;
}

Json to_json(const disk::LeviReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"point", to_json(s.point)},
                       {"det", s.det},
                       {"det_t2", s.det_t2},
                       {"restricted_min", s.restricted_min},
                       {"leaf_eig", s.leaf_eig}});
  return {{"sign", r.sign},
          {"constant_sign", r.constant_sign},
          {"min_abs_det_t2", r.min_abs_det_t2},
          {"max_abs_det_t2", r.max_abs_det_t2},
          {"ratio", r.ratio},
          {"min_restricted", r.min_restricted},
          {"restricted_positive", r.restricted_positive},
          {"max_leaf_eig", r.max_leaf_eig},
          {"samples", samples}};
}

Json to_json(const disk::TangencyReport& r) {
  return {{"residual", r.residual}, {"negative_mode_energy", r.negative_mode_energy}};
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_json(const std::filesystem::path& path, const Json& j) { write_atomic(path, j.dump(2) + "\n"); }

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  p += ".meta.json";
  return p;
}

void write_sidecar(const std::filesystem::path& path, const Json& meta) { write_json(sidecar_path(path), meta); }

std::string leaf_trace_csv(const disk::BoundaryDisk& f, std::size_t samples) {
  std::ostringstream out;
  out.precision(17);
  out << "theta";
  for (int c = 0; c < f.dim(); ++c) out << ",re_f" << c + 1 << ",im_f" << c + 1;
  out << "\n";
  for (std::size_t k = 0; k < samples; ++k) {
    const double th = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    out << th;
    for (const auto& z : f.eval(std::polar(1.0, th))) out << "," << z.real() << "," << z.imag();
    out << "\n";
  }
  return out.str();
}

std::string flow_trace_csv(const flow::FlowTrace& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "t,tau";
  const auto n = trace.samples.empty() ? 0 : trace.samples.front().z.size();
  for (Eigen::Index c = 0; c < n; ++c) out << ",re_z" << c + 1 << ",im_z" << c + 1;
  out << "\n";
  for (const auto& s : trace.samples) {
    out << s.t << "," << s.tau;
    for (Eigen::Index c = 0; c < s.z.size(); ++c) out << "," << s.z(c).real() << "," << s.z(c).imag();
    out << "\n";
  }
  return out.str();
}

}  // namespace grauert::io
