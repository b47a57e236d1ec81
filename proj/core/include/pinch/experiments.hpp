#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pinch/optimizer.hpp"
#include "pinch/scenario.hpp"

namespace pinch {

enum class Scheme { pso, grid, fixed };
enum class SweptVariable { target_rate, uncertainty_radius, outage_cap };

std::string_view to_string(Scheme scheme) noexcept;
std::string_view to_string(SweptVariable variable) noexcept;
std::optional<Scheme> parse_scheme(std::string_view name) noexcept;
std::optional<SweptVariable> parse_swept_variable(std::string_view name) noexcept;

/// Default grid for each swept variable: rates 1..7 bps/Hz, radii 1..6 m,
/// outage caps 0.01 .. 0.5.
std::vector<double> default_sweep_values(SweptVariable variable);

struct SweepSpec {
  SweptVariable swept_variable = SweptVariable::target_rate;
  std::vector<double> values;
  std::size_t realizations = 1000;
  ScenarioConfig base;
  ChannelParams channel;
  std::vector<Scheme> schemes{Scheme::pso, Scheme::grid, Scheme::fixed};
  PsoConfig pso;
  double grid_step = 0.01;
  double tol = kDefaultBisectionTolerance;
  std::size_t threads = 0;  // realization workers; 0 = PINCH_THREADS
};

struct SweepRecord {
  Scheme scheme = Scheme::pso;
  SweptVariable swept_variable = SweptVariable::target_rate;
  double value = 0.0;
  double mean_total_power = 0.0;  // W
  std::size_t realization_count = 0;
  std::uint64_t master_seed = 0;
};

/// Per-realization outcomes of one scheme, indexed [value][realization].
struct SchemeRun {
  Scheme scheme = Scheme::pso;
  std::vector<std::vector<double>> totals;
  std::vector<std::vector<double>> x_pins;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<SchemeRun> runs;
};

/// Seed of realization i; users are regenerated from it for every swept
/// value and every scheme.
std::uint64_t realization_seed(std::uint64_t master_seed, std::size_t realization) noexcept;

/// Users of realization i with the swept field set to `value`.
std::vector<UserSpec> realization_users(const SweepSpec& spec, std::size_t realization,
                                        double value);

SweepResult run_sweep_detailed(const SweepSpec& spec);
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

struct ComparisonRow {
  double value = 0.0;
  double fixed_over_pso = 0.0;  // NaN when either scheme is absent
  double pso_over_grid = 0.0;
};

/// Mean-power ratio numerator/denominator at every swept value.
std::vector<double> scheme_ratio(const std::vector<SweepRecord>& records, Scheme numerator,
                                 Scheme denominator);

std::vector<ComparisonRow> summarize(const std::vector<SweepRecord>& records);
void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

/// "%.17g"; round-trips every double.
std::string format_double(double v);

}  // namespace pinch
