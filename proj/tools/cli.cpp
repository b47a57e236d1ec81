#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinch/pinch.hpp"

namespace pinch::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  bool verbose = false;

  std::string scheme = "pso";

  std::string sweep;
  std::vector<std::string> schemes;
  std::vector<double> values;
  std::optional<std::size_t> realizations;
  std::string summary;

  double x_pin = 0.0;
  std::size_t user_index = 0;
  double power = 0.0;
  std::size_t samples = 1'000'000;
};

RunConfig load(const Options& opt) {
  RunConfig cfg = load_config(opt.config);
  if (opt.seed) cfg.scenario.master_seed = *opt.seed;
  return cfg;
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(Errc::invalid_config, "cannot write '" + path + "'");
  file << text;
  if (!file) fail(Errc::invalid_config, "failed writing '" + path + "'");
}

int solve(const Options& opt, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load(opt);
  const auto scheme = parse_scheme(opt.scheme);
  if (!scheme) fail(Errc::invalid_config, "unknown scheme '" + opt.scheme + "'");

  const ChannelParams channel = derive_channel_params(cfg.radio);
  const std::vector<UserSpec> users = scenario_users(cfg);

  OptimizationResult result;
  switch (*scheme) {
    case Scheme::pso: {
      PsoConfig pso = cfg.pso;
      pso.threads = 0;
      result = pso_optimize(users, channel, pso, cfg.bisection_tol);
      break;
    }
    case Scheme::grid:
      result = grid_search(users, channel, cfg.grid_step, cfg.bisection_tol);
      break;
    case Scheme::fixed:
      result = fixed_baseline(users, channel, cfg.bisection_tol);
      break;
  }
  if (opt.verbose) {
    err << "solve: " << to_string(*scheme) << " used " << result.evaluations
        << " objective evaluations\n";
  }

  ordered_json doc;
  doc["scheme"] = std::string(to_string(*scheme));
  doc["master_seed"] = cfg.scenario.master_seed;
  doc["x_pin"] = result.x_pin;
  doc["total_power_w"] = result.allocation.total_power;
  doc["evaluations"] = result.evaluations;
  ordered_json per_user = ordered_json::array();
  for (std::size_t k = 0; k < users.size(); ++k) {
    const UserSolution& s = result.allocation.per_user[k];
    per_user.push_back({{"index", k},
                        {"x", users[k].x},
                        {"y", users[k].y},
                        {"b", s.b},
                        {"c", s.c},
                        {"R", s.R},
                        {"power_w", s.power},
                        {"achieved_outage_fraction", s.achieved_outage_fraction}});
  }
  doc["users"] = std::move(per_user);
  emit(opt.out, out, doc.dump(2) + "\n");
  return kExitOk;
}

int sweep(const Options& opt, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load(opt);
  const auto variable = parse_swept_variable(opt.sweep);
  if (!variable) fail(Errc::invalid_config, "unknown sweep variable '" + opt.sweep + "'");

  SweepSpec spec;
  spec.swept_variable = *variable;
  spec.values = opt.values.empty() ? default_sweep_values(*variable) : opt.values;
  spec.realizations = opt.realizations.value_or(cfg.realizations);
  spec.base = cfg.scenario;
  spec.channel = derive_channel_params(cfg.radio);
  spec.pso = cfg.pso;
  spec.grid_step = cfg.grid_step;
  spec.tol = cfg.bisection_tol;
  if (!opt.schemes.empty()) {
    spec.schemes.clear();
    for (const std::string& name : opt.schemes) {
      const auto s = parse_scheme(name);
      if (!s) fail(Errc::invalid_config, "unknown scheme '" + name + "'");
      spec.schemes.push_back(*s);
    }
  }
  if (cfg.users) fail(Errc::invalid_config, "sweep draws random users; drop the users key");

  if (opt.verbose) {
    err << "sweep: " << to_string(*variable) << " over " << spec.values.size() << " values x "
        << spec.realizations << " realizations\n";
  }
  const std::vector<SweepRecord> records = run_sweep(spec);

  std::ostringstream csv;
  write_sweep_csv(csv, records);
  emit(opt.out, out, csv.str());

  if (!opt.summary.empty()) {
    std::ostringstream table;
    write_comparison_csv(table, summarize(records));
    emit(opt.summary, out, table.str());
  }
  return kExitOk;
}

int oracle(const Options& opt, std::ostream& out) {
  const RunConfig cfg = load(opt);
  const ChannelParams channel = derive_channel_params(cfg.radio);
  const std::vector<UserSpec> users = scenario_users(cfg);
  if (opt.user_index >= users.size()) {
    fail(Errc::invalid_config, "user index " + std::to_string(opt.user_index) + " out of range");
  }
  if (!(opt.x_pin >= 0.0 && opt.x_pin <= channel.length)) {
    fail(Errc::invalid_config, "x-pin outside the waveguide");
  }
  if (opt.samples < 1) fail(Errc::invalid_config, "-n must be >= 1");

  const UserSpec& user = users[opt.user_index];
  const McEstimate est = empirical_outage(user, opt.x_pin, opt.power, channel, opt.samples,
                                          cfg.scenario.master_seed);
  ordered_json doc;
  doc["master_seed"] = cfg.scenario.master_seed;
  doc["user_index"] = opt.user_index;
  doc["x_pin"] = opt.x_pin;
  doc["power_w"] = opt.power;
  doc["outage_cap"] = user.outage_cap;
  doc["estimate"] = est.value;
  doc["std_error"] = est.std_error;
  doc["samples"] = est.sample_count;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust power allocation for a single pinching antenna", "pinch"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config, "JSON scenario config")->required();
    cmd->add_option("--seed", opt.seed, "Override master_seed");
    cmd->add_flag("-v,--verbose", opt.verbose, "Progress on standard error");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Place the antenna and allocate power");
  common(solve_cmd);
  solve_cmd->add_option("--scheme", opt.scheme, "pso, grid or fixed");
  solve_cmd->add_option("--out", opt.out, "Write JSON here instead of stdout");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Average total power over a parameter sweep");
  common(sweep_cmd);
  sweep_cmd->add_option("--sweep", opt.sweep, "target_rate, uncertainty_radius or outage_cap")
      ->required();
  sweep_cmd->add_option("--out", opt.out, "CSV output path")->required();
  sweep_cmd->add_option("--scheme", opt.schemes, "Schemes to run (default all)")
      ->delimiter(',');
  sweep_cmd->add_option("--values", opt.values, "Swept values, ascending")->delimiter(',');
  sweep_cmd->add_option("--realizations", opt.realizations, "Override realizations");
  sweep_cmd->add_option("--summary", opt.summary, "Also write scheme power ratios here");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Monte Carlo outage at a given power");
  common(oracle_cmd);
  oracle_cmd->add_option("--x-pin", opt.x_pin, "Antenna position, m")->required();
  oracle_cmd->add_option("--user-index", opt.user_index, "User to test")->required();
  oracle_cmd->add_option("--power", opt.power, "Transmit power, W")->required();
  oracle_cmd->add_option("-n,--samples", opt.samples, "Monte Carlo samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pinch: " << e.what() << "\n" << app.help();
    return kExitConfigError;
  }

  try {
    if (solve_cmd->parsed()) return solve(opt, out, err);
    if (sweep_cmd->parsed()) return sweep(opt, out, err);
    return oracle(opt, out);
  } catch (const Error& e) {
    err << "pinch: " << e.what() << "\n";
    return e.code() == Errc::invalid_config ? kExitConfigError : kExitSolverError;
  } catch (const std::exception& e) {
    err << "pinch: " << e.what() << "\n";
    return kExitSolverError;
  }
}

}  // namespace pinch::cli
