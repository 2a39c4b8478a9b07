#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// Exercises the ios_sim binary end to end: exit codes, determinism, the
// --targets round trip, and the thread-count override.

namespace {

namespace fs = std::filesystem;

const std::string kBin = IOS_SIM_BIN;
const std::string kScenarios = SCENARIO_DIR;

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "iosim_cli" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + kBin + " " + args +
                          " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_scenario(const fs::path& p, const std::string& body) {
  std::ofstream out(p);
  out << body;
}

std::string scenario(const std::string& name) {
  return kScenarios + "/" + name + ".json";
}

} // namespace

TEST_CASE("exit codes: configuration errors map to 2") {
  const fs::path dir = fresh_dir("exit2");
  write_scenario(dir / "malformed.json", "{");
  CHECK(run("scatter --scenario " + (dir / "malformed.json").string() +
            " --out " + dir.string()) == 2);
  write_scenario(dir / "unknown.json", R"({"bogus": 1})");
  CHECK(run("scatter --scenario " + (dir / "unknown.json").string() +
            " --out " + dir.string()) == 2);
  write_scenario(dir / "badgrid.json",
                 R"({"sweeps": {"frequency": {"points": 0}}})");
  CHECK(run("scatter --scenario " + (dir / "badgrid.json").string() +
            " --out " + dir.string()) == 2);
  CHECK(run("optimize --scenario " + scenario("fig17_size_sweep") +
            " --solver gradient --out " + dir.string()) == 2);
  CHECK(run("scatter --scenario " + (dir / "missing.json").string() +
            " --out " + dir.string()) == 2);
}

TEST_CASE("exit codes: geometry and capability errors map to 3 and 4") {
  const fs::path dir = fresh_dir("exit34");
  // pattern target outside the sweep window
  write_scenario(dir / "target.json", R"({
    "layout": {"rows": 2, "cols": 4},
    "tx": [{"position_m": [0.0, 0.5, 0.0]}],
    "sweeps": {"pattern": {"start_deg": -30, "stop_deg": 30, "step_deg": 1,
                           "targets_deg": [80]}}
  })");
  CHECK(run("pattern --scenario " + (dir / "target.json").string() +
            " --out " + dir.string()) == 3);
  // incidence angle outside the 75-degree table hull
  write_scenario(dir / "steep.json",
                 R"({"sweeps": {"incidence_theta_deg": [80]}})");
  CHECK(run("scatter --scenario " + (dir / "steep.json").string() +
            " --out " + dir.string()) == 3);
  // exhaustive search over 31 groups exceeds the state-space cap
  write_scenario(dir / "huge.json", R"({
    "layout": {"rows": 31, "cols": 1},
    "grouping": {"mode": "rows"},
    "tx": [{"position_m": [0.0, 0.5, 0.0]}],
    "rx": [{"position_m": [0.3, 0.8, 0.0]}],
    "problem": {"solver": "exhaustive"}
  })");
  CHECK(run("optimize --scenario " + (dir / "huge.json").string() + " --out " +
            dir.string()) == 4);
}

TEST_CASE("determinism: identical scenario and seed give identical bytes") {
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  const std::string args = " --scenario " + scenario("testbed") + " --seed 9";
  REQUIRE(run("testbed" + args + " --out " + a.string()) == 0);
  REQUIRE(run("testbed" + args + " --out " + b.string()) == 0);
  CHECK(slurp(a / "testbed_testbed.csv") == slurp(b / "testbed_testbed.csv"));
  CHECK(slurp(a / "testbed_report.json") == slurp(b / "testbed_report.json"));
  // manifests agree on everything except wall time
  std::string ma = slurp(a / "testbed_manifest.json");
  std::string mb = slurp(b / "testbed_manifest.json");
  ma.erase(ma.find("wall_time_ms"));
  mb.erase(mb.find("wall_time_ms"));
  CHECK(ma == mb);
  // a different seed changes the noisy outputs
  const fs::path c = fresh_dir("det_c");
  REQUIRE(run("testbed --scenario " + scenario("testbed") +
              " --seed 10 --out " + c.string()) == 0);
  CHECK(slurp(a / "testbed_testbed.csv") != slurp(c / "testbed_testbed.csv"));
}

TEST_CASE("determinism: thread count does not change output bytes") {
  const fs::path a = fresh_dir("thr_a");
  const fs::path b = fresh_dir("thr_b");
  const std::string args = " --scenario " + scenario("fig10_pattern");
  REQUIRE(run("pattern" + args + " --out " + a.string() + " --threads 1") == 0);
  REQUIRE(run("pattern" + args + " --out " + b.string(),
              "IOS_SIM_THREADS=4") == 0);
  CHECK(slurp(a / "fig10_pattern.csv") == slurp(b / "fig10_pattern.csv"));
  CHECK(slurp(a / "fig10_metrics.json") == slurp(b / "fig10_metrics.json"));
}

TEST_CASE("fit --targets: scatter output round-trips through the fitter") {
  const fs::path dir = fresh_dir("fit_targets");
  write_scenario(dir / "scatter9.json", R"({
    "sweeps": {"frequency": {"start_ghz": 3.0, "stop_ghz": 4.2, "points": 9},
               "incidence_theta_deg": [0]},
    "outputs": {"prefix": "cal"}
  })");
  REQUIRE(run("scatter --scenario " + (dir / "scatter9.json").string() +
              " --out " + dir.string()) == 0);
  REQUIRE(run("fit --scenario " + (dir / "scatter9.json").string() +
              " --targets " + (dir / "cal_scatter.csv").string() + " --out " +
              dir.string()) == 0);
  const std::string report = slurp(dir / "cal_fit.json");
  const auto pos = report.find("\"residual\": ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(report.substr(pos + 12)) < 1e-3);
}

TEST_CASE("usage errors and help") {
  CHECK(run("") == 2);          // missing subcommand
  CHECK(run("scatter") == 2);   // missing --scenario
  CHECK(run("--help") == 0);
}
