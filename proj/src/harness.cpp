#include "sagrs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sagrs/error.hpp"

namespace sagrs::harness {

namespace {

constexpr std::string_view kMetricColumns[] = {"best_fitness", "convergence_cycle",
                                               "acceptance_rate", "true_evals"};
constexpr std::string_view kGroupColumns[] = {"system", "objective", "dimension",  "rate",
                                              "suggestions", "cycles", "pool_handling",
                                              "pool_size"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
  return value;
}

template <class T, class Parse>
std::vector<T> parse_list(std::string_view text, Parse parse) {
  std::vector<T> out;
  for (auto part : split(text, ',')) {
    part = trim(part);
    if (!part.empty()) out.push_back(parse(part));
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool is_random(System s) { return s == System::random_lsm || s == System::random_rbf; }

ModelKind model_of(System s) {
  return (s == System::sagrs_rbf || s == System::random_rbf) ? ModelKind::rbf : ModelKind::lsm;
}

void push_unique(std::vector<RunSetting>& out, const RunSetting& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

RunSetting ga_setting(std::size_t budget) {
  const auto shape = ga_baseline_shape(budget);
  RunSetting s;
  s.system = System::ga;
  s.rate = 0;
  s.suggestions = shape.population_size;
  s.cycles = shape.generations;
  s.pool_handling = PoolHandling::reset;
  s.pool_size = 0;
  s.ga_budget = budget;
  return s;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file " + path.string());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(System system) noexcept {
  switch (system) {
    case System::sagrs_lsm: return "sagrs-lsm";
    case System::sagrs_rbf: return "sagrs-rbf";
    case System::ga: return "ga";
    case System::random_lsm: return "random-lsm";
    case System::random_rbf: return "random-rbf";
  }
  return "unknown";
}

System parse_system(std::string_view name) {
  for (auto s : {System::sagrs_lsm, System::sagrs_rbf, System::ga, System::random_lsm,
                 System::random_rbf})
    if (name == to_string(s)) return s;
  throw ConfigError("unknown system '" + std::string(name) +
                    "' (expected sagrs-lsm, sagrs-rbf, ga, random-lsm or random-rbf)");
}

std::string RunSetting::pool_handling_label() const {
  if (system == System::ga) return "none";
  return std::string(to_string(pool_handling));
}

std::size_t RunSetting::true_evaluation_budget() const {
  if (system == System::ga) return ga_budget;
  return pool_size + cycles * suggestions;
}

void ExperimentSpec::validate() const {
  if (objective.empty()) throw ConfigError("no objective given");
  Objective(parse_objective_kind(objective), dimension);
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
  ga.validate();
  if (!explicit_settings.empty()) return;
  if (systems.empty() || rates.empty() || suggestions.empty() || cycles.empty() ||
      pool_handlings.empty())
    throw ConfigError("every sweep axis needs at least one value");
}

std::vector<RunSetting> expand_settings(const ExperimentSpec& spec) {
  std::vector<RunSetting> out;
  if (!spec.explicit_settings.empty()) {
    for (auto s : spec.explicit_settings) push_unique(out, s);
    return out;
  }

  std::size_t ga_budget = spec.ga_budget;
  if (ga_budget == 0)
    for (auto c : spec.cycles)
      for (auto k : spec.suggestions) ga_budget = std::max(ga_budget, spec.pool_size + c * k);

  for (auto system : spec.systems) {
    if (system == System::ga) {
      push_unique(out, ga_setting(ga_budget));
      continue;
    }
    for (auto rate : spec.rates)
      for (auto k : spec.suggestions)
        for (auto c : spec.cycles)
          for (auto handling : spec.pool_handlings) {
            RunSetting s{system, rate, k, c, handling, spec.pool_size, 0};
            if (is_random(system)) {
              s.rate = 0;
              s.pool_handling = PoolHandling::reset;
            }
            push_unique(out, s);
          }
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view objective,
                          std::size_t dimension, const RunSetting& s, std::size_t repetition) {
  std::ostringstream key;
  key << to_string(s.system) << '|' << objective << '|' << dimension << '|' << s.rate << '|'
      << s.suggestions << '|' << s.cycles << '|' << s.pool_handling_label() << '|' << s.pool_size
      << '|' << s.ga_budget << '|' << repetition;
  if (s.population_size != 0) key << "|pop" << s.population_size;
  return base_seed ^ splitmix64(fnv1a(key.str()));
}

SagrsConfig sagrs_config_for(const ExperimentSpec& spec, const RunSetting& s) {
  SagrsConfig cfg;
  cfg.model_kind = model_of(s.system);
  cfg.evaluation_rate = s.rate;
  cfg.suggestions_per_cycle = s.suggestions;
  cfg.cycles = s.cycles;
  cfg.pool_handling = s.pool_handling;
  cfg.initial_pool_size = s.pool_size;
  cfg.ga = spec.ga;
  if (s.population_size != 0) cfg.ga.population_size = s.population_size;
  cfg.exclusion_epsilon = spec.exclusion_epsilon;
  cfg.training_window = spec.training_window;
  return cfg;
}

RunResult execute_run(const ExperimentSpec& spec, const RunSetting& setting, std::uint64_t seed) {
  const Objective obj = make_objective(spec.objective, spec.dimension);
  Rng rng(seed);
  if (setting.system == System::ga) return run_ga_baseline(obj, setting.ga_budget, spec.ga, rng).run;
  const auto cfg = sagrs_config_for(spec, setting);
  if (is_random(setting.system)) return run_random_recommender(obj, cfg, rng);
  return run_sagrs(obj, cfg, rng);
}

// ---------------------------------------------------------------------------

SummaryStats summarize(std::span<const double> values) {
  detail::require(!values.empty(), "summarize: empty input");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  auto quantile = [&](double p) {
    const double h = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
  };
  SummaryStats s;
  s.count = v.size();
  s.min = v.front();
  s.max = v.back();
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  double sum = 0.0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(v.size());
  return s;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json metadata_for(const ExperimentSpec& spec,
                                    const std::vector<RunSetting>& settings) {
  nlohmann::ordered_json j;
  j["objective"] = spec.objective;
  j["dimension"] = spec.dimension;
  const Objective obj = make_objective(spec.objective, spec.dimension);
  j["domain"] = {{"lower", std::vector<double>(obj.lower().begin(), obj.lower().end())},
                 {"upper", std::vector<double>(obj.upper().begin(), obj.upper().end())}};
  j["repetitions"] = spec.repetitions;
  j["base_seed"] = spec.base_seed;
  j["seed_derivation"] = "base_seed XOR splitmix64(fnv1a(setting key | repetition)), mt19937_64";
  j["ga"] = {{"population_size", spec.ga.population_size},
             {"selection_factor", spec.ga.selection_factor},
             {"selection", "truncation: best ceil(selection_factor * N) form the mating pool"},
             {"mutation_prob", spec.ga.mutation_prob},
             {"mutation", "per-individual; Gaussian per coordinate, std = mutation_scale * domain width"},
             {"mutation_scale", spec.ga.mutation_scale},
             {"recombination_prob", spec.ga.recombination_prob},
             {"recombination", "arithmetic blend with per-coordinate uniform weights; "
                               "otherwise clone the better parent"},
             {"elitism", spec.ga.elitism},
             {"scoring", "lazy; unchanged clones and elites keep cached scores"}};
  j["surrogate"] = {
      {"lsm", "b0 + sum b_i x_i + sum b_(d+j) x_j^2 by normal equations; mean-fitness model "
              "when underdetermined or singular"},
      {"rbf_activation", "1 - exp(-r^2 / (2 sigma^2))"},
      {"rbf_sigma", "mean Euclidean distance over all pool pairs, recomputed every cycle"},
      {"rbf_ridge", "on singular Phi retry with 1e-8 * mean|Phi_ij| on the diagonal"},
      {"training_window", spec.training_window}};
  j["exclusion_epsilon"] = spec.exclusion_epsilon;
  j["acceptance_rule"] = "fitness strictly below the worst pool fitness at cycle start";
  j["quartile_method"] = "linear interpolation between closest ranks (h = (n-1)p)";
  j["ga_baseline"] = {
      {"shape", "n_pop = n_gen = floor(sqrt(n_eval))"},
      {"budget", "elites and unchanged clones are not re-evaluated; every distinct evaluation "
                 "counts once"},
      {"cycles", "generations after the first; suggestions are that generation's evaluations"}};
  auto& rows = j["settings"] = nlohmann::ordered_json::array();
  for (const auto& s : settings) {
    // The GA baseline's population is its shape, already in `suggestions`.
    const std::size_t population =
        s.system == System::ga ? s.suggestions : sagrs_config_for(spec, s).ga.population_size;
    rows.push_back({{"system", to_string(s.system)},
                    {"rate", s.rate},
                    {"suggestions", s.suggestions},
                    {"cycles", s.cycles},
                    {"pool_handling", s.pool_handling_label()},
                    {"pool_size", s.pool_size},
                    {"population_size", population},
                    {"true_evaluation_budget", s.true_evaluation_budget()}});
  }
  return j;
}

void write_setting_columns(std::ostream& out, const ExperimentSpec& spec, const RunSetting& s) {
  out << to_string(s.system) << ',' << spec.objective << ',' << spec.dimension << ',' << s.rate
      << ',' << s.suggestions << ',' << s.cycles << ',' << s.pool_handling_label() << ','
      << s.pool_size;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const auto settings = expand_settings(spec);

  ExperimentReport report;
  std::error_code ec;
  std::filesystem::create_directories(spec.output_dir, ec);
  if (ec) throw IoError("cannot create output directory " + spec.output_dir.string() + ": " + ec.message());
  report.runs_csv = spec.output_dir / kRunsFile;
  report.cycles_csv = spec.output_dir / kCyclesFile;
  report.summary_csv = spec.output_dir / kSummaryFile;
  report.metadata_json = spec.output_dir / kMetadataFile;
  auto runs_out = open_output(report.runs_csv);
  auto cycles_out = open_output(report.cycles_csv);
  auto summary_out = open_output(report.summary_csv);
  auto meta_out = open_output(report.metadata_json);

  report.runs.resize(settings.size() * spec.repetitions);
  for (std::size_t i = 0; i < settings.size(); ++i)
    for (std::size_t r = 0; r < spec.repetitions; ++r) {
      auto& row = report.runs[i * spec.repetitions + r];
      row.run_id = i * spec.repetitions + r;
      row.setting = settings[i];
      row.repetition = r;
      row.seed = derive_seed(spec.base_seed, spec.objective, spec.dimension, settings[i], r);
    }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < report.runs.size(); i = next++) {
      auto& row = report.runs[i];
      try {
        row.result = execute_run(spec, row.setting, row.seed);
        row.ok = true;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
    }
  };
  const std::size_t threads = std::min(spec.jobs, report.runs.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  runs_out << kRunsHeader << '\n';
  cycles_out << kCyclesHeader << '\n';
  for (const auto& row : report.runs) {
    runs_out << row.run_id << ',';
    write_setting_columns(runs_out, spec, row.setting);
    runs_out << ',' << row.seed << ',';
    if (row.ok) {
      runs_out << format_double(row.result.best_fitness) << ',' << row.result.convergence_cycle
               << ',' << format_double(row.result.acceptance_rate) << ','
               << row.result.true_evaluations_used << '\n';
    } else {
      ++report.failed_runs;
      runs_out << "nan,nan,nan,nan\n";
      std::cerr << "run " << row.run_id << " failed: " << row.error << '\n';
    }
    if (!row.ok) continue;
    for (const auto& rec : row.result.cycle_records)
      cycles_out << row.run_id << ',' << rec.cycle_index << ','
                 << format_double(rec.best_true_fitness_so_far) << ',' << rec.accepted_count << ','
                 << rec.suggested.size() << ',' << (rec.surrogate_fit_ok ? 1 : 0) << '\n';
  }

  summary_out << kSummaryHeader << '\n';
  for (std::size_t i = 0; i < settings.size(); ++i) {
    std::vector<double> metric[4];
    for (std::size_t r = 0; r < spec.repetitions; ++r) {
      const auto& row = report.runs[i * spec.repetitions + r];
      if (!row.ok) continue;
      metric[0].push_back(row.result.best_fitness);
      metric[1].push_back(static_cast<double>(row.result.convergence_cycle));
      metric[2].push_back(row.result.acceptance_rate);
      metric[3].push_back(static_cast<double>(row.result.true_evaluations_used));
    }
    for (std::size_t m = 0; m < 4; ++m) {
      if (metric[m].empty()) continue;
      const auto s = summarize(metric[m]);
      write_setting_columns(summary_out, spec, settings[i]);
      summary_out << ',' << kMetricColumns[m] << ',' << s.count << ',' << format_double(s.min)
                  << ',' << format_double(s.q1) << ',' << format_double(s.median) << ','
                  << format_double(s.q3) << ',' << format_double(s.max) << ','
                  << format_double(s.mean) << '\n';
    }
  }

  meta_out << metadata_for(spec, settings).dump(2) << '\n';

  for (auto* f : {&runs_out, &cycles_out, &summary_out, &meta_out}) {
    f->flush();
    if (!*f) throw IoError("failed writing experiment output in " + spec.output_dir.string());
  }
  return report;
}

// ---------------------------------------------------------------------------

std::vector<RunsCsvRow> read_runs_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw IoError(path.string() + " is empty");
  std::vector<std::string> header;
  for (auto cell : split(trim(line), ',')) header.emplace_back(cell);
  std::vector<RunsCsvRow> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto cells = split(trim(line), ',');
    if (cells.size() != header.size())
      throw IoError(path.string() + ": row has " + std::to_string(cells.size()) +
                    " fields, header has " + std::to_string(header.size()));
    RunsCsvRow row;
    for (std::size_t i = 0; i < cells.size(); ++i)
      row.fields.emplace(header[i], std::string(cells[i]));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string stats_json(const std::filesystem::path& runs_csv) {
  const auto rows = read_runs_csv(runs_csv);
  std::vector<std::string> keys;
  std::vector<std::vector<const RunsCsvRow*>> groups;
  for (const auto& row : rows) {
    std::string key;
    for (auto col : kGroupColumns) {
      const auto it = row.fields.find(std::string(col));
      if (it == row.fields.end()) throw IoError(runs_csv.string() + ": missing column " + std::string(col));
      key += it->second + ',';
    }
    const auto pos = std::find(keys.begin(), keys.end(), key);
    if (pos == keys.end()) {
      keys.push_back(key);
      groups.push_back({&row});
    } else {
      groups[static_cast<std::size_t>(pos - keys.begin())].push_back(&row);
    }
  }

  auto out = nlohmann::ordered_json::array();
  for (const auto& group : groups) {
    nlohmann::ordered_json entry;
    for (auto col : kGroupColumns) entry[std::string(col)] = group.front()->fields.at(std::string(col));
    entry["runs"] = group.size();
    for (auto metric : kMetricColumns) {
      std::vector<double> values;
      for (const auto* row : group) {
        const auto it = row->fields.find(std::string(metric));
        if (it == row->fields.end()) continue;
        const double v = std::strtod(it->second.c_str(), nullptr);
        if (std::isfinite(v)) values.push_back(v);
      }
      if (values.empty()) continue;
      const auto s = summarize(values);
      entry["metrics"][std::string(metric)] = {{"count", s.count}, {"min", s.min},  {"q1", s.q1},
                                               {"median", s.median}, {"q3", s.q3}, {"max", s.max},
                                               {"mean", s.mean}};
    }
    out.push_back(std::move(entry));
  }
  return out.dump(2);
}

// ---------------------------------------------------------------------------

void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  auto size = [&](std::string_view v) { return parse_number<std::size_t>(key, v); };
  auto real = [&](std::string_view v) { return parse_number<double>(key, v); };
  auto sizes = [&] { return parse_list<std::size_t>(value, size); };

  if (key == "objective") {
    parse_objective_kind(value);
    spec.objective = std::string(value);
  } else if (key == "dimension") spec.dimension = size(value);
  else if (key == "system" || key == "systems")
    spec.systems = parse_list<System>(value, [](std::string_view v) { return parse_system(v); });
  else if (key == "rate" || key == "rates" || key == "evaluation_rate") spec.rates = sizes();
  else if (key == "suggestions" || key == "suggestions_per_cycle") spec.suggestions = sizes();
  else if (key == "cycles") spec.cycles = sizes();
  else if (key == "pool_handling" || key == "pool_handlings")
    spec.pool_handlings = parse_list<PoolHandling>(value, [](std::string_view v) { return parse_pool_handling(v); });
  else if (key == "pool_size" || key == "initial_pool_size") spec.pool_size = size(value);
  else if (key == "repetitions" || key == "reps") spec.repetitions = size(value);
  else if (key == "seed" || key == "base_seed") spec.base_seed = parse_number<std::uint64_t>(key, value);
  else if (key == "out" || key == "output" || key == "output_dir") spec.output_dir = std::string(value);
  else if (key == "jobs") spec.jobs = size(value);
  else if (key == "ga_budget") spec.ga_budget = size(value);
  else if (key == "population_size") spec.ga.population_size = size(value);
  else if (key == "selection_factor") spec.ga.selection_factor = real(value);
  else if (key == "mutation_prob") spec.ga.mutation_prob = real(value);
  else if (key == "recombination_prob") spec.ga.recombination_prob = real(value);
  else if (key == "mutation_scale") spec.ga.mutation_scale = real(value);
  else if (key == "elitism") spec.ga.elitism = size(value);
  else if (key == "exclusion_epsilon") spec.exclusion_epsilon = real(value);
  else if (key == "training_window") spec.training_window = size(value);
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

ExperimentSpec parse_config(std::istream& in) {
  ExperimentSpec spec;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    apply_setting(spec, view.substr(0, eq), view.substr(eq + 1));
  }
  return spec;
}

ExperimentSpec parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  return parse_config(in);
}

// ---------------------------------------------------------------------------

ExperimentSpec preset_sweep_rates(std::string objective) {
  ExperimentSpec spec;
  spec.objective = std::move(objective);
  spec.systems = {System::sagrs_lsm, System::sagrs_rbf};
  spec.rates = {1, 2, 4, 8, 16, 32, 64};
  spec.suggestions = {4};
  spec.cycles = {100};
  spec.pool_handlings = {PoolHandling::reset, PoolHandling::no_reset};
  return spec;
}

ExperimentSpec preset_sweep_suggestions(std::string objective) {
  ExperimentSpec spec;
  spec.objective = std::move(objective);
  spec.systems = {System::sagrs_lsm, System::sagrs_rbf};
  spec.rates = {1};
  spec.suggestions = {1, 2, 3, 4, 5, 6, 7, 8};
  spec.cycles = {100};
  spec.pool_handlings = {PoolHandling::reset};
  return spec;
}

ExperimentSpec preset_sweep_cycles(std::string objective) {
  ExperimentSpec spec;
  spec.objective = std::move(objective);
  spec.systems = {System::sagrs_lsm, System::sagrs_rbf};
  spec.rates = {1};
  spec.suggestions = {4};
  spec.cycles = {10, 25, 50, 100, 150, 200};
  spec.pool_handlings = {PoolHandling::reset};
  return spec;
}

RunSetting compare_setting(std::string_view objective, ModelKind model) {
  const auto kind = parse_objective_kind(objective);
  const bool lsm = model == ModelKind::lsm;
  RunSetting s;
  s.system = lsm ? System::sagrs_lsm : System::sagrs_rbf;
  s.cycles = 100;
  s.pool_size = 100;
  s.population_size = 100;
  switch (kind) {
    case ObjectiveKind::bohachevsky:
      // Four suggestions per cycle for LSM; the rest comes from a pilot run.
      s.rate = lsm ? 64 : 4;
      s.suggestions = 4;
      s.pool_handling = PoolHandling::no_reset;
      break;
    case ObjectiveKind::ackley:
      s.rate = lsm ? 64 : 4;
      s.suggestions = 8;
      s.pool_handling = lsm ? PoolHandling::no_reset : PoolHandling::reset;
      // A larger population lets the RBF pair screen more candidates per cycle.
      if (!lsm) s.population_size = 200;
      break;
    case ObjectiveKind::schwefel:
      s.rate = 1;
      s.suggestions = 8;
      s.pool_handling = PoolHandling::reset;
      break;
  }
  return s;
}

ExperimentSpec preset_compare(std::string objective) {
  ExperimentSpec spec;
  spec.objective = std::move(objective);
  const auto lsm = compare_setting(spec.objective, ModelKind::lsm);
  const auto rbf = compare_setting(spec.objective, ModelKind::rbf);
  auto random_of = [](RunSetting s, System system) {
    s.system = system;
    s.rate = 0;
    s.pool_handling = PoolHandling::reset;
    return s;
  };
  const std::size_t budget = std::max(lsm.true_evaluation_budget(), rbf.true_evaluation_budget());
  spec.systems = {System::sagrs_lsm, System::sagrs_rbf, System::ga, System::random_lsm,
                  System::random_rbf};
  spec.explicit_settings = {lsm, rbf, ga_setting(budget), random_of(lsm, System::random_lsm),
                            random_of(rbf, System::random_rbf)};
  return spec;
}

}  // namespace sagrs::harness
