#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "pinch/pinch.hpp"

using namespace pinch;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int status = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "pinch");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = PINCH_TEST_TMPDIR;
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("solve: grid and pso agree on a single user") {
  const std::string config = write_file("single.json", R"({"num_users": 1, "master_seed": 8})");
  const Outcome grid = invoke({"solve", "--config", config, "--scheme", "grid"});
  const Outcome pso = invoke({"solve", "--config", config, "--scheme", "pso"});
  REQUIRE(grid.status == 0);
  REQUIRE(pso.status == 0);
  const double g = json::parse(grid.out)["total_power_w"].get<double>();
  const double p = json::parse(pso.out)["total_power_w"].get<double>();
  CHECK(std::abs(p - g) <= 0.005 * g);
}

TEST_CASE("solve output matches the library and round-trips") {
  const std::string config = write_file("five.json", R"({"master_seed": 31})");
  const std::string out_path = (scratch() / "five_out.json").string();
  REQUIRE(invoke({"solve", "--config", config, "--scheme", "fixed", "--out", out_path}).status == 0);
  const std::string text = slurp(out_path);
  const json doc = json::parse(text);

  const RunConfig cfg = load_config(config);
  const OptimizationResult expected =
      fixed_baseline(scenario_users(cfg), derive_channel_params(cfg.radio));
  CHECK(doc["master_seed"] == 31);
  CHECK(doc["scheme"] == "fixed");
  CHECK(doc["x_pin"].get<double>() == expected.x_pin);
  CHECK(doc["total_power_w"].get<double>() == expected.allocation.total_power);
  REQUIRE(doc["users"].size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(doc["users"][k]["power_w"].get<double>() == expected.allocation.per_user[k].power);
    CHECK(doc["users"][k]["achieved_outage_fraction"].get<double>() ==
          expected.allocation.per_user[k].achieved_outage_fraction);
  }
  CHECK(nlohmann::ordered_json::parse(text).dump(2) + "\n" == text);
}

TEST_CASE("seed override changes the scenario") {
  const std::string config = write_file("seeded.json", R"({"master_seed": 1})");
  const Outcome a = invoke({"solve", "--config", config, "--scheme", "fixed"});
  const Outcome b = invoke({"solve", "--config", config, "--scheme", "fixed", "--seed", "2"});
  CHECK(json::parse(b.out)["master_seed"] == 2);
  CHECK(a.out != b.out);
}

TEST_CASE("oracle at the solved power reports the cap") {
  const std::string config = write_file("oracle.json", R"({"num_users": 3, "master_seed": 4})");
  const Outcome solved = invoke({"solve", "--config", config, "--scheme", "grid"});
  REQUIRE(solved.status == 0);
  const json doc = json::parse(solved.out);
  std::ostringstream x_pin, power;
  x_pin.precision(17);
  power.precision(17);
  x_pin << doc["x_pin"].get<double>();
  power << doc["users"][1]["power_w"].get<double>();

  const Outcome oracle = invoke({"oracle", "--config", config, "--x-pin", x_pin.str(),
                                 "--user-index", "1", "--power", power.str(), "-n", "1000000"});
  REQUIRE(oracle.status == 0);
  const json est = json::parse(oracle.out);
  CHECK(est["samples"] == 1000000);
  CHECK(std::abs(est["estimate"].get<double>() - 0.01) <= 4.0 * est["std_error"].get<double>());
}

TEST_CASE("sweep writes CSV and a summary") {
  const std::string config =
      write_file("sweep.json", R"({"realizations": 3, "grid_step_m": 0.5, "master_seed": 6})");
  const std::string csv = (scratch() / "sweep.csv").string();
  const std::string summary = (scratch() / "summary.csv").string();
  const Outcome o = invoke({"sweep", "--config", config, "--sweep", "target_rate", "--out", csv,
                            "--values", "1,2", "--summary", summary});
  REQUIRE(o.status == 0);
  const std::string text = slurp(csv);
  CHECK(text.rfind("scheme,swept_variable,value,mean_total_power_w,realizations,master_seed\n"
                   "pso,target_rate,1,",
                   0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  CHECK(slurp(summary).rfind("value,fixed_over_pso,pso_over_grid\n", 0) == 0);

  const std::string csv2 = (scratch() / "sweep_fixed.csv").string();
  REQUIRE(invoke({"sweep", "--config", config, "--sweep", "outage_cap", "--out", csv2,
                  "--scheme", "fixed", "--realizations", "2"})
              .status == 0);
  const std::string fixed_only = slurp(csv2);
  CHECK(std::count(fixed_only.begin(), fixed_only.end(), '\n') == 8);
  CHECK(fixed_only.find("fixed,outage_cap,0.5,") != std::string::npos);
}

TEST_CASE("exit codes") {
  const Outcome missing = invoke({"solve", "--config", "/nonexistent/x.json"});
  CHECK(missing.status == cli::kExitConfigError);
  CHECK(missing.err.find("cannot open config file") != std::string::npos);

  const std::string config = write_file("codes.json", "{}");
  CHECK(invoke({"solve", "--config", config, "--bogus"}).status == cli::kExitConfigError);
  CHECK(invoke({}).status == cli::kExitConfigError);
  CHECK(invoke({"solve", "--config", config, "--scheme", "magic"}).status ==
        cli::kExitConfigError);
  CHECK(invoke({"sweep", "--config", config, "--sweep", "height", "--out", "x.csv"}).status ==
        cli::kExitConfigError);
  CHECK(invoke({"oracle", "--config", config, "--x-pin", "10", "--user-index", "9", "--power",
                "1"})
            .status == cli::kExitConfigError);

  const Outcome solver = invoke(
      {"oracle", "--config", config, "--x-pin", "10", "--user-index", "0", "--power", "-1"});
  CHECK(solver.status == cli::kExitSolverError);
  CHECK_FALSE(solver.err.empty());

  CHECK(invoke({"--help"}).status == cli::kExitOk);
}
