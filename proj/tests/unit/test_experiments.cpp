#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "pinch/error.hpp"
#include "pinch/experiments.hpp"
#include "test_support.hpp"

using namespace pinch;
using pinch::test::rel_diff;

namespace {

SweepSpec small_spec(SweptVariable variable, std::size_t realizations) {
  SweepSpec spec;
  spec.swept_variable = variable;
  spec.values = default_sweep_values(variable);
  spec.realizations = realizations;
  spec.channel = pinch::test::reference_channel();
  spec.base.master_seed = 2025;
  spec.grid_step = 0.1;
  spec.threads = 1;
  return spec;
}

}  // namespace

TEST_CASE("names round-trip") {
  for (Scheme s : {Scheme::pso, Scheme::grid, Scheme::fixed}) CHECK(parse_scheme(to_string(s)) == s);
  for (SweptVariable v : {SweptVariable::target_rate, SweptVariable::uncertainty_radius,
                          SweptVariable::outage_cap}) {
    CHECK(parse_swept_variable(to_string(v)) == v);
  }
  CHECK_FALSE(parse_scheme("exhaustive"));
}

TEST_CASE("one realization of the fixed scheme is one baseline call") {
  SweepSpec spec = small_spec(SweptVariable::target_rate, 1);
  spec.values = {4.0};
  spec.schemes = {Scheme::fixed};
  const std::vector<SweepRecord> records = run_sweep(spec);
  REQUIRE(records.size() == 1);
  const std::vector<UserSpec> users = realization_users(spec, 0, 4.0);
  CHECK(records[0].mean_total_power == fixed_baseline(users, spec.channel).allocation.total_power);
  CHECK(records[0].realization_count == 1);
  CHECK(records[0].master_seed == 2025);
}

TEST_CASE("rate sweep scales exactly with 2^rate - 1") {
  const SweepSpec spec = small_spec(SweptVariable::target_rate, 6);
  const SweepResult result = run_sweep_detailed(spec);
  for (const SchemeRun& run : result.runs) {
    for (std::size_t v = 0; v < spec.values.size(); ++v) {
      const double factor = std::exp2(spec.values[v]) - 1.0;
      for (std::size_t i = 0; i < spec.realizations; ++i) {
        CHECK(rel_diff(run.totals[v][i] / factor, run.totals[0][i]) <= 1e-10);
      }
    }
  }
  for (std::size_t k = 1; k < result.records.size(); ++k) {
    if (result.records[k].scheme == result.records[k - 1].scheme) {
      CHECK(result.records[k].mean_total_power > result.records[k - 1].mean_total_power);
    }
  }
}

TEST_CASE("records are ordered pso, grid, fixed then by value") {
  SweepSpec spec = small_spec(SweptVariable::outage_cap, 2);
  spec.schemes = {Scheme::fixed, Scheme::pso, Scheme::grid};
  const std::vector<SweepRecord> records = run_sweep(spec);
  REQUIRE(records.size() == 3 * spec.values.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    CHECK(records[k].scheme == std::array{Scheme::pso, Scheme::grid, Scheme::fixed}[k / 7]);
    CHECK(records[k].value == spec.values[k % 7]);
  }

  std::ostringstream csv;
  write_sweep_csv(csv, records);
  std::istringstream lines(csv.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "scheme,swept_variable,value,mean_total_power_w,realizations,master_seed");
  CHECK(first.rfind("pso,outage_cap,0.01,", 0) == 0);
  CHECK(first.substr(first.size() - 7) == ",2,2025");
}

TEST_CASE("sweeps are reproducible across runs and worker counts") {
  SweepSpec spec = small_spec(SweptVariable::uncertainty_radius, 8);
  const std::vector<SweepRecord> serial = run_sweep(spec);
  spec.threads = 4;
  const std::vector<SweepRecord> parallel = run_sweep(spec);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].mean_total_power == parallel[k].mean_total_power);
  }
}

TEST_CASE("outage sweep: grid and fixed totals never rise with the cap") {
  const SweepSpec spec = small_spec(SweptVariable::outage_cap, 6);
  const SweepResult result = run_sweep_detailed(spec);
  for (const SchemeRun& run : result.runs) {
    if (run.scheme == Scheme::pso) continue;
    for (std::size_t i = 0; i < spec.realizations; ++i) {
      for (std::size_t v = 1; v < spec.values.size(); ++v) {
        CHECK(run.totals[v][i] <= run.totals[v - 1][i]);
      }
    }
  }
}

TEST_CASE("invalid sweep specs") {
  SweepSpec spec = small_spec(SweptVariable::target_rate, 2);
  spec.values = {};
  CHECK_THROWS_AS(run_sweep(spec), Error);
  spec.values = {3.0, 1.0};
  CHECK_THROWS_AS(run_sweep(spec), Error);
  spec.values = {1.0};
  spec.realizations = 0;
  CHECK_THROWS_AS(run_sweep(spec), Error);
}

TEST_CASE("solver failures carry sweep context") {
  SweepSpec spec = small_spec(SweptVariable::outage_cap, 2);
  spec.values = {0.3, 0.7};
  spec.schemes = {Scheme::fixed};
  try {
    run_sweep(spec);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_threshold);
    const std::string what = e.what();
    CHECK(what.find("outage_cap=0.69999999999999996") != std::string::npos);
    CHECK(what.find("realization 0") != std::string::npos);
    CHECK(what.find("scheme fixed") != std::string::npos);
  }
}

TEST_CASE("summaries") {
  SweepSpec spec = small_spec(SweptVariable::target_rate, 10);
  spec.values = {1.0, 3.0, 5.0};
  spec.grid_step = 0.01;
  const std::vector<SweepRecord> records = run_sweep(spec);

  for (double ratio : scheme_ratio(records, Scheme::pso, Scheme::pso)) CHECK(ratio == 1.0);

  const std::vector<ComparisonRow> rows = summarize(records);
  REQUIRE(rows.size() == 3);
  for (const ComparisonRow& row : rows) {
    CHECK(row.fixed_over_pso > 1.0);
    // PSO moves continuously and may undercut the 0.01 m grid slightly.
    CHECK(row.pso_over_grid >= 1.0 - 1e-6);
    CHECK(row.pso_over_grid <= 1.005);
  }

  std::ostringstream csv;
  write_comparison_csv(csv, rows);
  CHECK(csv.str().rfind("value,fixed_over_pso,pso_over_grid\n1,", 0) == 0);

  std::vector<SweepRecord> mixed = records;
  mixed.back().master_seed += 1;
  CHECK_THROWS_AS(summarize(mixed), Error);
  std::vector<SweepRecord> ragged(records.begin(), records.end() - 1);
  CHECK_THROWS_AS(summarize(ragged), Error);
  std::vector<SweepRecord> single(records.begin(), records.begin() + 3);
  CHECK_THROWS_AS(summarize(single), Error);
}
