#include "pinch/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <set>

#include "pinch/error.hpp"
#include "pinch/parallel.hpp"
#include "pinch/random.hpp"

namespace pinch {
namespace {

constexpr Scheme kSchemeOrder[] = {Scheme::pso, Scheme::grid, Scheme::fixed};

void set_field(UserSpec& user, SweptVariable variable, double value) {
  switch (variable) {
    case SweptVariable::target_rate:
      user.target_rate = value;
      break;
    case SweptVariable::uncertainty_radius:
      user.radius = value;
      break;
    case SweptVariable::outage_cap:
      user.outage_cap = value;
      break;
  }
}

void check(const SweepSpec& spec) {
  if (spec.values.empty()) fail(Errc::invalid_config, "sweep needs at least one value");
  if (!std::is_sorted(spec.values.begin(), spec.values.end())) {
    fail(Errc::invalid_config, "sweep values must be sorted ascending");
  }
  if (spec.realizations < 1) fail(Errc::invalid_config, "realizations must be >= 1");
  if (spec.schemes.empty()) fail(Errc::invalid_config, "sweep needs at least one scheme");
  if (!(spec.grid_step > 0.0)) fail(Errc::invalid_config, "grid step must be > 0");
  validate(spec.base);
  validate(spec.pso);
}

double run_scheme(Scheme scheme, const std::vector<UserSpec>& users, const SweepSpec& spec,
                  std::size_t realization, double& x_pin) {
  OptimizationResult result;
  switch (scheme) {
    case Scheme::pso: {
      PsoConfig pso = spec.pso;
      pso.seed = derive_seed(spec.pso.seed, realization);
      pso.threads = 1;
      result = pso_optimize(users, spec.channel, pso, spec.tol);
      break;
    }
    case Scheme::grid:
      result = grid_search(users, spec.channel, spec.grid_step, spec.tol);
      break;
    case Scheme::fixed:
      result = fixed_baseline(users, spec.channel, spec.tol);
      break;
  }
  x_pin = result.x_pin;
  return result.allocation.total_power;
}

}  // namespace

std::string_view to_string(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::pso:
      return "pso";
    case Scheme::grid:
      return "grid";
    case Scheme::fixed:
      return "fixed";
  }
  return "?";
}

std::string_view to_string(SweptVariable variable) noexcept {
  switch (variable) {
    case SweptVariable::target_rate:
      return "target_rate";
    case SweptVariable::uncertainty_radius:
      return "uncertainty_radius";
    case SweptVariable::outage_cap:
      return "outage_cap";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) noexcept {
  for (Scheme s : kSchemeOrder) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<SweptVariable> parse_swept_variable(std::string_view name) noexcept {
  for (SweptVariable v : {SweptVariable::target_rate, SweptVariable::uncertainty_radius,
                          SweptVariable::outage_cap}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

std::vector<double> default_sweep_values(SweptVariable variable) {
  switch (variable) {
    case SweptVariable::target_rate:
      return {1, 2, 3, 4, 5, 6, 7};
    case SweptVariable::uncertainty_radius:
      return {1, 2, 3, 4, 5, 6};
    case SweptVariable::outage_cap:
      return {0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
  }
  return {};
}

std::uint64_t realization_seed(std::uint64_t master_seed, std::size_t realization) noexcept {
  return derive_seed(master_seed, realization);
}

std::vector<UserSpec> realization_users(const SweepSpec& spec, std::size_t realization,
                                        double value) {
  std::vector<UserSpec> users =
      generate_users(spec.base, realization_seed(spec.base.master_seed, realization));
  for (UserSpec& user : users) set_field(user, spec.swept_variable, value);
  return users;
}

SweepResult run_sweep_detailed(const SweepSpec& spec) {
  check(spec);

  std::vector<Scheme> schemes;
  for (Scheme s : kSchemeOrder) {
    if (std::find(spec.schemes.begin(), spec.schemes.end(), s) != spec.schemes.end()) {
      schemes.push_back(s);
    }
  }

  const std::size_t nv = spec.values.size();
  const std::size_t nr = spec.realizations;
  SweepResult result;
  for (Scheme s : schemes) {
    result.runs.push_back({s, std::vector<std::vector<double>>(nv, std::vector<double>(nr)),
                           std::vector<std::vector<double>>(nv, std::vector<double>(nr))});
  }

  parallel_for(nr, spec.threads, [&](std::size_t i) {
    for (std::size_t v = 0; v < nv; ++v) {
      const std::vector<UserSpec> users = realization_users(spec, i, spec.values[v]);
      for (SchemeRun& run : result.runs) {
        try {
          run.totals[v][i] = run_scheme(run.scheme, users, spec, i, run.x_pins[v][i]);
        } catch (const Error& e) {
          throw Error(e.code(), std::string(e.what()) + " [scheme " +
                                    std::string(to_string(run.scheme)) + ", " +
                                    std::string(to_string(spec.swept_variable)) + "=" +
                                    format_double(spec.values[v]) + ", realization " +
                                    std::to_string(i) + ", master_seed " +
                                    std::to_string(spec.base.master_seed) + "]");
        }
      }
    }
  });

  for (const SchemeRun& run : result.runs) {
    for (std::size_t v = 0; v < nv; ++v) {
      double sum = 0.0;
      for (double t : run.totals[v]) sum += t;
      result.records.push_back({run.scheme, spec.swept_variable, spec.values[v],
                                sum / static_cast<double>(nr), nr, spec.base.master_seed});
    }
  }
  return result;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  return run_sweep_detailed(spec).records;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << "scheme,swept_variable,value,mean_total_power_w,realizations,master_seed\n";
  for (const SweepRecord& r : records) {
    out << to_string(r.scheme) << ',' << to_string(r.swept_variable) << ','
        << format_double(r.value) << ',' << format_double(r.mean_total_power) << ','
        << r.realization_count << ',' << r.master_seed << '\n';
  }
}

namespace {

// value -> mean power for one scheme, after checking every record belongs
// to the same sweep.
std::map<Scheme, std::map<double, double>> index_records(const std::vector<SweepRecord>& records) {
  if (records.empty()) fail(Errc::invalid_config, "no sweep records to summarize");
  const SweepRecord& head = records.front();
  std::map<Scheme, std::map<double, double>> by_scheme;
  for (const SweepRecord& r : records) {
    if (r.swept_variable != head.swept_variable || r.master_seed != head.master_seed ||
        r.realization_count != head.realization_count) {
      fail(Errc::invalid_config, "sweep records come from different sweeps");
    }
    if (!by_scheme[r.scheme].emplace(r.value, r.mean_total_power).second) {
      fail(Errc::invalid_config, "duplicate sweep record");
    }
  }
  const std::map<double, double>& first = by_scheme.begin()->second;
  for (const auto& [scheme, values] : by_scheme) {
    if (values.size() != first.size() ||
        !std::equal(values.begin(), values.end(), first.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; })) {
      fail(Errc::invalid_config, "schemes were swept over different values");
    }
  }
  return by_scheme;
}

}  // namespace

std::vector<double> scheme_ratio(const std::vector<SweepRecord>& records, Scheme numerator,
                                 Scheme denominator) {
  const auto by_scheme = index_records(records);
  const auto num = by_scheme.find(numerator);
  const auto den = by_scheme.find(denominator);
  if (num == by_scheme.end() || den == by_scheme.end()) {
    fail(Errc::invalid_config, "ratio needs both schemes in the records");
  }
  std::vector<double> ratios;
  for (const auto& [value, power] : num->second) ratios.push_back(power / den->second.at(value));
  return ratios;
}

std::vector<ComparisonRow> summarize(const std::vector<SweepRecord>& records) {
  const auto by_scheme = index_records(records);
  if (by_scheme.size() < 2) fail(Errc::invalid_config, "summary needs at least two schemes");

  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  auto lookup = [&](Scheme s, double value) {
    const auto it = by_scheme.find(s);
    return it == by_scheme.end() ? nan : it->second.at(value);
  };

  std::vector<ComparisonRow> rows;
  for (const auto& [value, unused] : by_scheme.begin()->second) {
    const double pso = lookup(Scheme::pso, value);
    rows.push_back({value, lookup(Scheme::fixed, value) / pso, pso / lookup(Scheme::grid, value)});
  }
  return rows;
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "value,fixed_over_pso,pso_over_grid\n";
  for (const ComparisonRow& row : rows) {
    out << format_double(row.value) << ',' << format_double(row.fixed_over_pso) << ','
        << format_double(row.pso_over_grid) << '\n';
  }
}

}  // namespace pinch
