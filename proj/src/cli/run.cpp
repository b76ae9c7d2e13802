#include "grauert/cli/run.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "grauert/disk/verify.hpp"
#include "grauert/flow/flow.hpp"
#include "grauert/io/report_io.hpp"
#include "grauert/spectral.hpp"
#include "grauert/tube/radius.hpp"

namespace grauert::cli {
namespace {

using io::Json;

Command command_from_string(const std::string& s) {
  if (s == "tube") return Command::tube;
  if (s == "foliate") return Command::foliate;
  if (s == "flow") return Command::flow;
  if (s == "verify") return Command::verify;
  throw ConfigError("unknown command: " + s);
}

geom::SurfaceMetric make_metric(const RunConfig& cfg) {
  if (cfg.metric == "round") return geom::SurfaceMetric::round_sphere();
  if (cfg.metric == "flat") return geom::SurfaceMetric::flat();
  if (cfg.metric == "zoll") return geom::SurfaceMetric::zoll(cfg.zoll_eps);
  throw ConfigError("unknown metric: " + cfg.metric);
}

disk::HermitianModel make_model(const RunConfig& cfg) {
  disk::HermitianModel m;
  try {
    m.kind = disk::model_kind_from_string(cfg.model);
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }
  m.lambda = cfg.lambda;
  m.kappa = cfg.kappa;
  m.validate();
  return m;
}

disk::FoliationOptions foliation_options(const RunConfig& cfg) {
  disk::FoliationOptions o;
  o.n_modes = cfg.modes;
  o.lambda_step = cfg.lambda_step;
  o.parallel = cfg.parallel;
  return o;
}

std::filesystem::path output_path(const RunConfig& cfg) {
  return cfg.output.empty() ? std::filesystem::path("out") / (to_string(cfg.command) + ".json") : cfg.output;
}

void finish(const RunConfig& cfg, const std::filesystem::path& out, Json report, bool pass, double seconds) {
  report["pass"] = pass;
  io::write_json(out, report);
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  io::write_sidecar(out, {{"command", to_string(cfg.command)}, {"finished_utc", stamp}, {"seconds", seconds}});
  std::cout << to_string(cfg.command) << ": " << (pass ? "pass" : "FAIL") << " (" << out.string() << ")\n";
}

bool run_tube(const RunConfig& cfg, Json& rep) {
  const auto metric = make_metric(cfg);
  tube::ScanOptions opt;
  opt.sigma_lines = cfg.sigma_lines;
  opt.tau_step = cfg.tau_step;
  opt.parallel = cfg.parallel;
  const auto r = tube::tube_radius(metric, cfg.geodesics, cfg.tau_ceiling, opt);
  rep = io::to_json(r, metric);
  rep["geodesics"] = cfg.geodesics;
  rep["tau_ceiling"] = cfg.tau_ceiling;
  std::cout << "radius " << r.radius_estimate << ", entire " << (r.entire_flag ? "yes" : "no") << ", breaches "
            << r.per_geodesic_breach.size() << "\n";
  bool pass = true;
  if (cfg.expect_entire) pass = pass && r.entire_flag;
  if (cfg.expect_breach) pass = pass && !r.per_geodesic_breach.empty();
  return pass;
}

Json verify_family(const RunConfig& cfg, disk::ExtremalFamily& family, const disk::FoliationChart& chart,
                   bool& pass) {
  Json out = Json::object();
  if (cfg.levi) {
    const auto L = disk::levi_verify(family, disk::levi_points(chart.grid));
    const bool ok = L.passes(cfg.levi_ratio, cfg.leaf_tol);
    out["levi"] = io::to_json(L);
    out["levi"]["pass"] = ok;
    std::cout << "levi: sign " << L.sign << ", |det||t|^2 in [" << L.min_abs_det_t2 << ", " << L.max_abs_det_t2
              << "], restricted min " << L.min_restricted << ", leaf " << L.max_leaf_eig << "\n";
    pass = pass && ok;
  }
  if (cfg.tangency) {
    Json leaves = Json::array();
    double worst = 0.0, worst_neg = 0.0;
    for (const auto& d : chart.disks) {
      const auto t = disk::tangency_verify(family, d);
      leaves.push_back(io::to_json(t));
      worst = std::max(worst, t.residual);
      worst_neg = std::max(worst_neg, t.negative_mode_energy);
    }
    const bool ok = worst <= cfg.tangency_tol && worst_neg <= 1e-9;
    out["tangency"] = {{"max_residual", worst}, {"max_negative_mode_energy", worst_neg}, {"leaves", leaves}, {"pass", ok}};
    std::cout << "tangency: residual " << worst << ", negative-mode energy " << worst_neg << "\n";
    pass = pass && ok;
  }
  return out;
}

bool run_foliate(const RunConfig& cfg, Json& rep) {
  disk::ExtremalFamily family(make_model(cfg), foliation_options(cfg));
  const auto chart = disk::assemble_foliation(family, disk::default_grid(family.model().base_dim()));
  rep = io::to_json(chart);
  const auto& r = chart.reports;
  std::cout << "grad " << r.max_grad_norm << ", boundary residual " << r.max_boundary_residual << ", |u| on boundary "
            << r.max_u_boundary << ", injective " << (r.injective ? "yes" : "no") << "\n";
  bool pass = r.max_grad_norm <= cfg.grad_tol && r.max_boundary_residual <= cfg.boundary_tol &&
              r.max_u_boundary <= cfg.boundary_tol && r.injective;
  rep["checks"] = verify_family(cfg, family, chart, pass);
  if (!cfg.traces.empty())
    for (std::size_t i = 0; i < chart.disks.size(); ++i)
      io::write_atomic(cfg.traces / ("leaf_" + std::to_string(i) + ".csv"), io::leaf_trace_csv(chart.disks[i]));
  return pass;
}

bool run_flow(const RunConfig& cfg, Json& rep, const std::filesystem::path& out) {
  std::unique_ptr<flow::ExhaustionModel> model;
  int n = cfg.dim;
  if (cfg.flow_model == "euclidean") {
    model = std::make_unique<flow::EuclideanNormSq>(n);
  } else {
    auto family = std::make_shared<disk::ExtremalFamily>(make_model(cfg), foliation_options(cfg));
    n = family->model().dim;
    model = std::make_unique<flow::LineBundleModel>(disk::line_bundle_model(family));
  }
  if (static_cast<int>(cfg.point.size()) != 2 * n) throw ConfigError("point needs 2*dim real values");
  flow::CVec z(n);
  for (int i = 0; i < n; ++i) z(i) = Complex(cfg.point[2 * i], cfg.point[2 * i + 1]);
  if (cfg.field != "xi" && cfg.field != "eta") throw ConfigError("field must be xi or eta");
  const auto kind = cfg.field == "xi" ? flow::FieldKind::xi : flow::FieldKind::eta;

  const auto trace = grauert::flow::flow(*model, z, kind, cfg.time, cfg.step);
  const double tau0 = trace.samples.front().tau;
  double err = 0.0;
  for (const auto& s : trace.samples) {
    const double expect = kind == flow::FieldKind::xi ? std::exp(s.t) * tau0 : tau0;
    err = std::max(err, std::abs(s.tau - expect) / expect);
  }
  std::filesystem::path csv = out;
  csv.replace_extension(".csv");
  io::write_atomic(csv, io::flow_trace_csv(trace));
  rep = {{"schema", io::kSchema},
         {"flow_model", cfg.flow_model},
         {"field", cfg.field},
         {"time", cfg.time},
         {"step", cfg.step},
         {"samples", trace.samples.size()},
         {"left_chart", trace.left_chart},
         {"tau_identity_error", err},
         {"trace_csv", csv.filename().string()}};
  std::cout << "tau identity error " << err << (trace.left_chart ? " (left chart)" : "") << "\n";
  return err <= cfg.identity_tol && !trace.left_chart;
}

bool run_verify(const RunConfig& cfg, Json& rep) {
  if (cfg.chart.empty()) throw ConfigError("verify needs --chart");
  const auto chart = io::chart_from_json(io::read_json(cfg.chart));
  auto opt = foliation_options(cfg);
  opt.n_modes = chart.n_modes;
  disk::ExtremalFamily family(chart.model, opt);
  for (std::size_t i = 0; i < chart.disks.size(); ++i) {
    disk::NewtonResult r;
    r.disk = chart.disks[i];
    r.energy = chart.E[i];
    r.grad_norm = chart.grad_norm[i];
    r.residual = chart.residual[i];
    family.insert(r);
  }
  RunConfig c = cfg;
  if (!c.levi && !c.tangency) c.levi = c.tangency = true;
  bool pass = true;
  rep = {{"schema", io::kSchema}, {"chart", cfg.chart.filename().string()}, {"model", io::to_json(chart.model)}};
  rep["checks"] = verify_family(c, family, chart, pass);
  return pass;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::tube: return "tube";
    case Command::foliate: return "foliate";
    case Command::flow: return "flow";
    case Command::verify: return "verify";
  }
  return "?";
}

void validate(const RunConfig& cfg) {
  for (double tol : {cfg.grad_tol, cfg.boundary_tol, cfg.tangency_tol, cfg.leaf_tol, cfg.identity_tol, cfg.step,
                     cfg.tau_step, cfg.lambda_step})
    if (!(tol > 0.0)) throw ConfigError("tolerances and steps must be positive");
  if (cfg.levi_ratio < 1.0) throw ConfigError("levi-ratio must be at least 1");
  if (!spectral::is_power_of_two(static_cast<std::size_t>(std::max(cfg.modes, 0))) || cfg.modes < 8)
    throw ConfigError("modes must be a power of two, at least 8");
  if (cfg.geodesics < 1 || cfg.sigma_lines < 1) throw ConfigError("geodesics and sigma-lines must be positive");
  if (!(cfg.tau_ceiling > 0.0)) throw ConfigError("tau-ceiling must be positive");
  if (cfg.dim < 1) throw ConfigError("dim must be positive");
  if (cfg.time < 0.0) throw ConfigError("time must be nonnegative");
}

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Grauert tube, Monge-Ampere flow and extremal disk experiments"};
  app.set_config("--config", "", "flat key=value file; keys are long option names");
  app.allow_config_extras(false);
  std::string command, output, chart, traces;
  app.add_option("command", command, "tube | foliate | flow | verify")->required();
  app.add_option("--metric", cfg.metric, "round | flat | zoll");
  app.add_option("--zoll-eps", cfg.zoll_eps);
  app.add_option("--geodesics", cfg.geodesics);
  app.add_option("--tau-ceiling", cfg.tau_ceiling);
  app.add_option("--sigma-lines", cfg.sigma_lines);
  app.add_option("--tau-step", cfg.tau_step);
  app.add_flag("--expect-entire", cfg.expect_entire);
  app.add_flag("--expect-breach", cfg.expect_breach);
  app.add_option("--model", cfg.model, "plus | quadric | flat");
  app.add_option("--lambda", cfg.lambda);
  app.add_option("--kappa", cfg.kappa);
  app.add_option("--modes", cfg.modes);
  app.add_option("--lambda-step", cfg.lambda_step);
  app.add_option("--grad-tol", cfg.grad_tol);
  app.add_option("--boundary-tol", cfg.boundary_tol);
  app.add_option("--tangency-tol", cfg.tangency_tol);
  app.add_option("--levi-ratio", cfg.levi_ratio);
  app.add_option("--leaf-tol", cfg.leaf_tol);
  app.add_flag("--levi", cfg.levi);
  app.add_flag("--tangency", cfg.tangency);
  app.add_option("--chart", chart);
  app.add_option("--traces", traces, "directory for leaf CSV traces");
  app.add_option("--flow-model", cfg.flow_model, "euclidean | disk");
  app.add_option("--dim", cfg.dim);
  app.add_option("--field", cfg.field, "xi | eta");
  app.add_option("--point", cfg.point, "re1 im1 re2 im2 ...")->delimiter(',');
  app.add_option("--time", cfg.time);
  app.add_option("--step", cfg.step);
  app.add_option("--identity-tol", cfg.identity_tol);
  bool serial = false;
  app.add_flag("--serial", serial, "disable threads");
  app.add_option("--output,-o", output);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    throw;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  cfg.command = command_from_string(command);
  cfg.output = output;
  cfg.chart = chart;
  cfg.traces = traces;
  cfg.parallel = !serial;
  if (cfg.flow_model != "euclidean" && cfg.flow_model != "disk") throw ConfigError("unknown flow-model");
  validate(cfg);
  return cfg;
}

int run(const RunConfig& cfg) {
  validate(cfg);
  const auto out = output_path(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  Json rep;
  bool pass = false;
  try {
    switch (cfg.command) {
      case Command::tube: pass = run_tube(cfg, rep); break;
      case Command::foliate: pass = run_foliate(cfg, rep); break;
      case Command::flow: pass = run_flow(cfg, rep, out); break;
      case Command::verify: pass = run_verify(cfg, rep); break;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  } catch (const Error& e) {
    rep = {{"schema", io::kSchema}, {"error", e.what()}};
    std::cerr << "error: " << e.what() << "\n";
    pass = false;
  }
  finish(cfg, out, rep, pass, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return pass ? 0 : 1;
}

int main_entry(int argc, const char* const* argv) {
  try {
    return run(parse_args(argc, argv));
  } catch (const CLI::CallForHelp&) {
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace grauert::cli
