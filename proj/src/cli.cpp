#include "sagrs/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <vector>

#include <CLI11.hpp>

#include "sagrs/error.hpp"
#include "sagrs/harness.hpp"

namespace sagrs::cli {

namespace {

using harness::ExperimentSpec;

// Flags shared by every experiment subcommand. Unset flags leave the spec alone.
struct Overrides {
  std::optional<std::string> objective;
  std::optional<std::size_t> dimension;
  std::vector<std::string> systems;
  std::vector<std::size_t> rates;
  std::vector<std::size_t> suggestions;
  std::vector<std::size_t> cycles;
  std::vector<std::string> pool_handlings;
  std::optional<std::size_t> pool_size;
  std::optional<std::size_t> reps;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> jobs;

  void add_common(CLI::App* app) {
    app->add_option("--objective", objective, "bohachevsky, ackley or schwefel");
    app->add_option("--dimension", dimension, "search-space dimension (default 2)");
    app->add_option("--reps", reps, "repetitions per grid point (default 10)");
    app->add_option("--seed", seed, "base seed");
    app->add_option("--out", out, "output directory");
    app->add_option("--jobs", jobs, "concurrent runs");
  }

  void add_grid(CLI::App* app) {
    app->add_option("--system", systems, "sagrs-lsm, sagrs-rbf, ga, random-lsm, random-rbf")->delimiter(',');
    app->add_option("--rate", rates, "GA generations per cycle")->delimiter(',');
    app->add_option("--suggestions", suggestions, "suggestions per cycle")->delimiter(',');
    app->add_option("--cycles", cycles, "recommendation cycles")->delimiter(',');
    app->add_option("--pool-handling", pool_handlings, "reset or no_reset")->delimiter(',');
    app->add_option("--pool-size", pool_size, "initial pool size");
  }

  void apply(ExperimentSpec& spec) const {
    if (objective) harness::apply_setting(spec, "objective", *objective);
    if (dimension) spec.dimension = *dimension;
    if (!systems.empty()) {
      spec.systems.clear();
      for (const auto& s : systems) spec.systems.push_back(harness::parse_system(s));
    }
    if (!rates.empty()) spec.rates = rates;
    if (!suggestions.empty()) spec.suggestions = suggestions;
    if (!cycles.empty()) spec.cycles = cycles;
    if (!pool_handlings.empty()) {
      spec.pool_handlings.clear();
      for (const auto& h : pool_handlings) spec.pool_handlings.push_back(parse_pool_handling(h));
    }
    if (pool_size) spec.pool_size = *pool_size;
    if (reps) spec.repetitions = *reps;
    if (seed) spec.base_seed = *seed;
    if (out) spec.output_dir = *out;
    if (jobs) spec.jobs = *jobs;
  }
};

std::string default_output_dir() {
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return "results";
}

int execute(const ExperimentSpec& spec, std::ostream& out) {
  const auto report = harness::run_experiment(spec);
  out << "wrote " << report.runs.size() << " runs to " << spec.output_dir.string() << '\n';
  if (report.failed_runs > 0) {
    out << report.failed_runs << " run(s) failed\n";
    return kExitRunFailed;
  }
  return kExitOk;
}

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surrogate-assisted genetic recommender benchmark"};
  app.require_subcommand(1);

  Overrides run_flags, rates_flags, sugg_flags, cycles_flags, compare_flags;
  std::optional<std::string> config_path;
  std::string stats_path;

  auto* run = app.add_subcommand("run", "execute an experiment from a config file and/or flags");
  run->add_option("--config", config_path, "flat key = value config file");
  run_flags.add_common(run);
  run_flags.add_grid(run);

  auto* sweep_rates = app.add_subcommand("sweep-rates", "evaluation rate x pool handling sweep");
  rates_flags.add_common(sweep_rates);
  rates_flags.add_grid(sweep_rates);

  auto* sweep_sugg = app.add_subcommand("sweep-suggestions", "suggestions-per-cycle sweep");
  sugg_flags.add_common(sweep_sugg);
  sugg_flags.add_grid(sweep_sugg);

  auto* sweep_cycles = app.add_subcommand("sweep-cycles", "recommendation-cycle budget sweep");
  cycles_flags.add_common(sweep_cycles);
  cycles_flags.add_grid(sweep_cycles);

  auto* compare = app.add_subcommand("compare", "SAGRS vs GA vs random recommender");
  compare_flags.add_common(compare);

  auto* stats = app.add_subcommand("stats", "summary statistics of an existing runs.csv as JSON");
  stats->add_option("file", stats_path, "runs.csv to aggregate")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  ExperimentSpec spec;
  try {
    if (stats->parsed()) {
      out << harness::stats_json(stats_path) << '\n';
      return kExitOk;
    }

    spec.output_dir = default_output_dir();
    if (run->parsed()) {
      if (config_path) {
        const auto out_dir = spec.output_dir;
        spec = harness::parse_config_file(*config_path);
        if (spec.output_dir == ExperimentSpec{}.output_dir) spec.output_dir = out_dir;
      }
      run_flags.apply(spec);
    } else {
      const Overrides* flags = &compare_flags;
      if (sweep_rates->parsed()) flags = &rates_flags;
      if (sweep_sugg->parsed()) flags = &sugg_flags;
      if (sweep_cycles->parsed()) flags = &cycles_flags;
      if (!flags->objective) throw ConfigError("--objective is required");
      const auto& objective = *flags->objective;
      const auto out_dir = spec.output_dir;
      if (sweep_rates->parsed()) spec = harness::preset_sweep_rates(objective);
      else if (sweep_sugg->parsed()) spec = harness::preset_sweep_suggestions(objective);
      else if (sweep_cycles->parsed()) spec = harness::preset_sweep_cycles(objective);
      else spec = harness::preset_compare(objective);
      spec.output_dir = out_dir;
      flags->apply(spec);
    }
    spec.validate();
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRunFailed;
  }

  try {
    return execute(spec, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRunFailed;
  }
}

}  // namespace sagrs::cli
