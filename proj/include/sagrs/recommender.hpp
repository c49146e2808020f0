#pragma once

// The surrogate-assisted genetic recommendation loop: fit a meta-model to the
// evaluated pool, optimize candidates against it with the GA, suggest the
// best-predicted unevaluated items, evaluate them truly, grow the pool, repeat.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "sagrs/evolution.hpp"
#include "sagrs/objectives.hpp"
#include "sagrs/surrogate.hpp"
#include "sagrs/types.hpp"

namespace sagrs {

enum class PoolHandling { reset, no_reset };

std::string_view to_string(PoolHandling handling) noexcept;
PoolHandling parse_pool_handling(std::string_view name);

struct SagrsConfig {
  ModelKind model_kind = ModelKind::lsm;
  std::size_t evaluation_rate = 1;  ///< GA generations per cycle; 0 skips optimization
  std::size_t suggestions_per_cycle = 4;
  std::size_t cycles = 100;
  PoolHandling pool_handling = PoolHandling::reset;
  std::size_t initial_pool_size = 100;
  GaConfig ga;
  double exclusion_epsilon = 1e-9;
  std::size_t training_window = 0;  ///< train on the newest N items; 0 = whole pool

  void validate(const Objective& obj) const;
};

struct CycleRecord {
  std::size_t cycle_index = 0;  ///< 1-based
  std::vector<Item> suggested;
  std::size_t accepted_count = 0;
  double best_true_fitness_so_far = 0.0;
  bool surrogate_fit_ok = true;
};

struct RunResult {
  std::vector<CycleRecord> cycle_records;
  double best_fitness = 0.0;
  Point best_point;
  std::size_t convergence_cycle = 0;
  double acceptance_rate = 0.0;
  std::size_t true_evaluations_used = 0;
  std::vector<Item> evaluation_log;  ///< every true evaluation, in order

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

bool operator==(const Item& a, const Item& b);
bool operator==(const CycleRecord& a, const CycleRecord& b);

RunResult run_sagrs(const Objective& obj, const SagrsConfig& cfg, Rng& rng);

/// Picks k points in ascending surrogate order from the population, skipping
/// any within `exclusion_epsilon` of a pool item or of an earlier pick. Runs
/// short are filled with uniform samples under the same rule.
std::vector<Point> select_suggestions(const Population& pop, const EvaluatedPool& pool,
                                      std::size_t k, const MetaModel& model,
                                      const Objective& obj, double exclusion_epsilon, Rng& rng);

/// Suggestions strictly better than the worst fitness seen before them.
std::size_t count_accepted(std::span<const Item> suggested, double worst_before);
std::size_t count_accepted(std::span<const Item> suggested, const EvaluatedPool& pool_before);

/// 1-based index of the last record with an accepted suggestion, 0 if none.
std::size_t convergence_cycle(std::span<const CycleRecord> records);

/// Total accepted over total suggested.
double acceptance_rate(std::span<const CycleRecord> records);

}  // namespace sagrs
