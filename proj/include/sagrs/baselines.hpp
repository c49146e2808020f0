#pragma once

// Comparison systems: a conventional GA on the true objective with a matched
// evaluation budget, and the random recommender (the loop without GA steps).

#include <cstddef>
#include <span>

#include "sagrs/evolution.hpp"
#include "sagrs/objectives.hpp"
#include "sagrs/recommender.hpp"

namespace sagrs {

/// Objective wrapper that counts evaluations and refuses to exceed a budget.
class BudgetedObjective {
 public:
  BudgetedObjective(FitnessFn inner, std::size_t budget);
  BudgetedObjective(const Objective& inner, std::size_t budget);

  /// Throws BudgetExhausted once `used() == budget()`.
  double evaluate(std::span<const double> point);

  std::size_t budget() const noexcept { return budget_; }
  std::size_t used() const noexcept { return used_; }
  std::size_t remaining() const noexcept { return budget_ - used_; }

 private:
  FitnessFn inner_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

struct BaselineShape {
  std::size_t population_size;
  std::size_t generations;

  friend bool operator==(const BaselineShape&, const BaselineShape&) = default;
};

/// population = generations = floor(sqrt(n_eval)).
BaselineShape ga_baseline_shape(std::size_t n_eval);

struct GaBaselineResult {
  /// Generations after the first are reported as cycles; their "suggestions"
  /// are the individuals evaluated in that generation.
  RunResult run;
  BaselineShape shape;
  std::size_t generations_completed = 0;
  bool budget_exhausted = false;
};

/// Default operator settings (0.9 / 0.1 / 0.05) with the population
/// size taken from the shape.
GaConfig baseline_ga_config(std::size_t n_eval);

GaBaselineResult run_ga_baseline(const Objective& obj, std::size_t n_eval, GaConfig ga, Rng& rng);

/// Same, but scoring with `truth`; `domain` only supplies the box.
GaBaselineResult run_ga_baseline(const Objective& domain, const FitnessFn& truth,
                                 std::size_t n_eval, GaConfig ga, Rng& rng);

/// run_sagrs with evaluation_rate = 0 and reset population handling.
RunResult run_random_recommender(const Objective& obj, SagrsConfig cfg, Rng& rng);

}  // namespace sagrs
