#pragma once

// Batch front-end. Options come from command-line flags or a flat key=value
// file (--config); keys are the long flag names without dashes.

#include <filesystem>
#include <string>
#include <vector>

#include "grauert/common.hpp"

namespace grauert::cli {

enum class Command { tube, foliate, flow, verify };

struct ConfigError : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct RunConfig {
  Command command = Command::tube;

  // tube
  std::string metric = "round";
  double zoll_eps = 0.0;
  int geodesics = 32;
  double tau_ceiling = 6.0;
  int sigma_lines = 64;
  double tau_step = 0.01;
  bool expect_entire = false;
  bool expect_breach = false;

  // foliate / verify
  std::string model = "quadric";
  double lambda = 0.0;
  double kappa = 1.0;
  int modes = 64;
  double lambda_step = 0.01;
  double grad_tol = 1e-10;
  double boundary_tol = 1e-10;
  double tangency_tol = 1e-7;
  double levi_ratio = 2.0;
  double leaf_tol = 1e-8;
  bool levi = false;
  bool tangency = false;
  std::filesystem::path chart;
  std::filesystem::path traces;

  // flow
  std::string flow_model = "euclidean";
  int dim = 2;
  std::string field = "xi";
  std::vector<double> point = {1.0, 0.0, 0.5, 0.5};
  double time = 3.0;
  double step = 1e-3;
  double identity_tol = 1e-9;

  bool parallel = true;
  std::filesystem::path output;
};

std::string to_string(Command c);

// Throws ConfigError on unknown keys, bad values or nonpositive tolerances.
RunConfig parse_args(int argc, const char* const* argv);
void validate(const RunConfig& cfg);

// 0 if every requested check passes, 1 otherwise. Reports are written either way.
int run(const RunConfig& cfg);

// parse_args + run with exit code 2 on configuration errors.
int main_entry(int argc, const char* const* argv);

}  // namespace grauert::cli
