#pragma once

// Experiment orchestration: sweep grids, repetitions with derived seeds,
// box-plot statistics and CSV / JSON output.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sagrs/baselines.hpp"
#include "sagrs/recommender.hpp"

namespace sagrs::harness {

enum class System { sagrs_lsm, sagrs_rbf, ga, random_lsm, random_rbf };

std::string_view to_string(System system) noexcept;
System parse_system(std::string_view name);

/// One point of the experiment grid. For the GA, `suggestions` and `cycles`
/// hold the population size and generation count, and `ga_budget` the n_eval.
struct RunSetting {
  System system = System::sagrs_lsm;
  std::size_t rate = 1;
  std::size_t suggestions = 4;
  std::size_t cycles = 100;
  PoolHandling pool_handling = PoolHandling::reset;
  std::size_t pool_size = 100;
  std::size_t ga_budget = 0;
  std::size_t population_size = 0;  ///< recommender GA population; 0 keeps ExperimentSpec::ga's

  /// Column value for pool_handling; "none" for the GA.
  std::string pool_handling_label() const;
  std::size_t true_evaluation_budget() const;

  friend bool operator==(const RunSetting&, const RunSetting&) = default;
};

struct ExperimentSpec {
  std::string objective;  ///< required
  std::size_t dimension = 2;
  std::vector<System> systems{System::sagrs_lsm};
  std::vector<std::size_t> rates{1};
  std::vector<std::size_t> suggestions{4};
  std::vector<std::size_t> cycles{100};
  std::vector<PoolHandling> pool_handlings{PoolHandling::reset};
  std::size_t pool_size = 100;
  std::size_t repetitions = 10;
  std::uint64_t base_seed = 0;
  std::filesystem::path output_dir = "results";
  std::size_t jobs = 1;
  std::size_t ga_budget = 0;  ///< 0: the largest budget among the SAGRS settings
  GaConfig ga;
  double exclusion_epsilon = 1e-9;
  std::size_t training_window = 0;
  /// When non-empty, used verbatim instead of the cartesian grid.
  std::vector<RunSetting> explicit_settings;

  /// Throws ConfigError on an empty axis, zero repetitions or bad names.
  void validate() const;
};

/// Grid points in axis order with duplicates removed. Random recommenders
/// ignore the rate / pool-handling axes; the GA collapses to one setting.
std::vector<RunSetting> expand_settings(const ExperimentSpec& spec);

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view objective,
                          std::size_t dimension, const RunSetting& setting, std::size_t repetition);

SagrsConfig sagrs_config_for(const ExperimentSpec& spec, const RunSetting& setting);

/// Runs one repetition of one setting with the given seed.
RunResult execute_run(const ExperimentSpec& spec, const RunSetting& setting, std::uint64_t seed);

struct SummaryStats {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
  std::size_t count = 0;
};

/// Quartiles by linear interpolation between closest ranks.
SummaryStats summarize(std::span<const double> values);

inline constexpr const char* kRunsHeader =
    "run_id,system,objective,dimension,rate,suggestions,cycles,pool_handling,pool_size,seed,"
    "best_fitness,convergence_cycle,acceptance_rate,true_evals";
inline constexpr const char* kCyclesHeader =
    "run_id,cycle,best_fitness_so_far,accepted_count,suggested_count,surrogate_fit_ok";
inline constexpr const char* kSummaryHeader =
    "system,objective,dimension,rate,suggestions,cycles,pool_handling,pool_size,metric,count,"
    "min,q1,median,q3,max,mean";

inline constexpr const char* kRunsFile = "runs.csv";
inline constexpr const char* kCyclesFile = "cycles.csv";
inline constexpr const char* kSummaryFile = "summary.csv";
inline constexpr const char* kMetadataFile = "metadata.json";

/// 17 significant digits; "nan" for failed values.
std::string format_double(double v);

struct RunRow {
  std::size_t run_id = 0;
  RunSetting setting;
  std::size_t repetition = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  RunResult result;
};

struct ExperimentReport {
  std::vector<RunRow> runs;
  std::size_t failed_runs = 0;
  std::filesystem::path runs_csv, cycles_csv, summary_csv, metadata_json;
};

/// Executes the grid x repetitions and writes runs.csv, cycles.csv,
/// summary.csv and metadata.json into spec.output_dir. Output files are
/// opened before any run starts (IoError if that fails); a failing run
/// becomes a row of nan values and the batch continues.
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Parsed runs.csv row; failed runs carry nan metrics.
struct RunsCsvRow {
  std::map<std::string, std::string> fields;
};

std::vector<RunsCsvRow> read_runs_csv(const std::filesystem::path& path);

/// Re-aggregates a runs.csv into JSON text: one entry per grid point with
/// SummaryStats for every metric column.
std::string stats_json(const std::filesystem::path& runs_csv);

/// Flat key = value document, '#' comments. Keys mirror ExperimentSpec
/// fields; list-valued keys take comma separated values.
ExperimentSpec parse_config(std::istream& in);
ExperimentSpec parse_config_file(const std::filesystem::path& path);
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

// Presets for the parameter studies and the system comparison.
ExperimentSpec preset_sweep_rates(std::string objective);
ExperimentSpec preset_sweep_suggestions(std::string objective);
ExperimentSpec preset_sweep_cycles(std::string objective);
ExperimentSpec preset_compare(std::string objective);

/// SAGRS settings used by the comparison preset for one model on one objective.
RunSetting compare_setting(std::string_view objective, ModelKind model);

}  // namespace sagrs::harness
