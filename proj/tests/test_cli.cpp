#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "grauert/cli/run.hpp"
#include "grauert/io/report_io.hpp"

using namespace grauert;
namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "grauert_test_cli";

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GRAUERT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cli::RunConfig parse(std::vector<const char*> args) {
  args.insert(args.begin(), "grauert");
  return cli::parse_args(static_cast<int>(args.size()), args.data());
}

}  // namespace

TEST_CASE("flag parsing") {
  const auto c = parse({"tube", "--metric", "zoll", "--zoll-eps", "0.2", "--geodesics", "8"});
  CHECK(c.command == cli::Command::tube);
  CHECK(c.metric == "zoll");
  CHECK(c.zoll_eps == 0.2);
  CHECK(c.geodesics == 8);
  const auto f = parse({"flow", "--point", "1,0,0,2", "--field", "eta", "--serial"});
  CHECK(f.point == std::vector<double>{1, 0, 0, 2});
  CHECK_FALSE(f.parallel);
  CHECK_THROWS_AS(parse({"sail"}), cli::ConfigError);
  CHECK_THROWS_AS(parse({"tube", "--geodesics", "x"}), cli::ConfigError);
  CHECK_THROWS_AS(parse({"foliate", "--modes", "48"}), cli::ConfigError);
  CHECK_THROWS_AS(parse({"foliate", "--grad-tol", "0"}), cli::ConfigError);
  CHECK_THROWS_AS(parse({"flow", "--flow-model", "sphere"}), cli::ConfigError);
}

TEST_CASE("key=value config files") {
  fs::create_directories(kDir);
  const auto cfg = kDir / "run.cfg";
  std::ofstream(cfg) << "# tube run\ncommand=tube\nmetric=flat\ngeodesics=4\ntau-ceiling=2.5\nexpect-entire=true\n";
  const auto c = parse({"--config", cfg.c_str()});
  CHECK(c.command == cli::Command::tube);
  CHECK(c.metric == "flat");
  CHECK(c.tau_ceiling == 2.5);
  CHECK(c.expect_entire);
  // Flags override the file.
  CHECK(parse({"--config", cfg.c_str(), "--geodesics", "2"}).geodesics == 2);
  std::ofstream(kDir / "bad.cfg") << "command=tube\nunknown-key=1\n";
  CHECK_THROWS_AS(parse({"--config", (kDir / "bad.cfg").c_str()}), cli::ConfigError);
}

TEST_CASE("tube on the round sphere is entire") {
  const auto out = kDir / "tube.json";
  CHECK(run_cli("tube --metric round --geodesics 32 --tau-ceiling 6 --expect-entire -o " + out.string()) == 0);
  const auto j = io::read_json(out);
  CHECK(j["entire_flag"] == true);
  CHECK(j["per_geodesic_breach"].empty());
  CHECK(fs::exists(io::sidecar_path(out)));
}

TEST_CASE("foliate, verify and determinism") {
  const auto a = kDir / "chart_a.json", b = kDir / "chart_b.json";
  CHECK(run_cli("foliate --model quadric-like --lambda 0.0 --modes 64 -o " + a.string()) == 0);
  const auto j = io::read_json(a);
  for (const auto& g : j["grid"]) CHECK(g["grad_norm"].get<double>() <= 1e-10);
  CHECK(j["pass"] == true);

  CHECK(run_cli("foliate --model quadric --lambda 0.0 --modes 64 --serial -o " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));

  const auto v = kDir / "verify.json";
  CHECK(run_cli("verify --chart " + a.string() + " --levi --tangency -o " + v.string()) == 0);
  const auto r = io::read_json(v);
  CHECK(r["checks"]["levi"]["pass"] == true);
  CHECK(r["checks"]["tangency"]["pass"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("tube --no-such-flag") == 2);
  CHECK(run_cli("verify --chart " + (kDir / "missing.json").string() + " -o " + (kDir / "v2.json").string()) == 2);
  // Unreachable tolerance: the report is still written, exit 1.
  const auto out = kDir / "strict.json";
  fs::remove(out);
  CHECK(run_cli("foliate --model quadric --modes 16 --grad-tol 1e-30 -o " + out.string()) == 1);
  CHECK(io::read_json(out)["pass"] == false);
  // The sphere has no breach to report.
  CHECK(run_cli("tube --metric round --geodesics 2 --tau-ceiling 1 --expect-breach -o " + (kDir / "t.json").string()) == 1);
}

TEST_CASE("flow identities from the command line") {
  const auto out = kDir / "flow.json";
  CHECK(run_cli("flow --field xi --time 3 --point 1,0,0.5,0.5 -o " + out.string()) == 0);
  CHECK(io::read_json(out)["tau_identity_error"].get<double>() <= 1e-9);
  CHECK(fs::exists(kDir / "flow.csv"));
  CHECK(run_cli("flow --field eta --time 3 -o " + out.string()) == 0);
  CHECK(run_cli("flow --point 1,0 -o " + out.string()) == 2);
}
