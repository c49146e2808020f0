#include "sagrs/baselines.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "sagrs/error.hpp"

namespace sagrs {

BudgetedObjective::BudgetedObjective(FitnessFn inner, std::size_t budget)
    : inner_(std::move(inner)), budget_(budget) {}

BudgetedObjective::BudgetedObjective(const Objective& inner, std::size_t budget)
    : BudgetedObjective([&inner](std::span<const double> p) { return inner.evaluate(p); }, budget) {}

double BudgetedObjective::evaluate(std::span<const double> point) {
  if (used_ >= budget_)
    throw BudgetExhausted("evaluation budget of " + std::to_string(budget_) + " exhausted");
  const double f = inner_(point);
  ++used_;
  return f;
}

BaselineShape ga_baseline_shape(std::size_t n_eval) {
  detail::require(n_eval >= 4, "ga_baseline_shape: n_eval must be >= 4");
  auto s = static_cast<std::size_t>(std::sqrt(static_cast<double>(n_eval)));
  while (s * s > n_eval) --s;
  while ((s + 1) * (s + 1) <= n_eval) ++s;
  return {s, s};
}

GaConfig baseline_ga_config(std::size_t n_eval) {
  GaConfig ga;
  ga.population_size = ga_baseline_shape(n_eval).population_size;
  return ga;
}

GaBaselineResult run_ga_baseline(const Objective& obj, std::size_t n_eval, GaConfig ga, Rng& rng) {
  return run_ga_baseline(obj, [&obj](std::span<const double> p) { return obj.evaluate(p); },
                         n_eval, ga, rng);
}

GaBaselineResult run_ga_baseline(const Objective& obj, const FitnessFn& truth, std::size_t n_eval,
                                 GaConfig ga, Rng& rng) {
  GaBaselineResult out;
  out.shape = ga_baseline_shape(n_eval);
  ga.population_size = out.shape.population_size;
  ga.validate();

  BudgetedObjective budget(truth, n_eval);
  RunResult& run = out.run;
  double best = std::numeric_limits<double>::infinity();
  double worst = -std::numeric_limits<double>::infinity();
  std::vector<Item> fresh;

  const FitnessFn fitness = [&](std::span<const double> p) {
    const double f = budget.evaluate(p);
    Item item{Point(p.begin(), p.end()), f};
    run.evaluation_log.push_back(item);
    fresh.push_back(std::move(item));
    if (f < best) {
      best = f;
      run.best_point.assign(p.begin(), p.end());
    }
    return f;
  };

  auto close_generation = [&](std::size_t generation) {
    if (generation > 1) {
      CycleRecord rec;
      rec.cycle_index = generation - 1;
      rec.accepted_count = count_accepted(fresh, worst);
      rec.suggested = fresh;
      rec.best_true_fitness_so_far = best;
      run.cycle_records.push_back(std::move(rec));
    }
    for (const auto& it : fresh) worst = std::max(worst, *it.fitness);
    fresh.clear();
    out.generations_completed = generation;
  };

  Population pop = init_population(obj, ga, rng);
  try {
    score_population(pop, fitness);
    close_generation(1);
    for (std::size_t g = 2; g <= out.shape.generations; ++g) {
      pop = step_generation(std::move(pop), fitness, ga, obj, rng);
      score_population(pop, fitness);
      close_generation(g);
    }
  } catch (const BudgetExhausted&) {
    out.budget_exhausted = true;
    if (!fresh.empty()) close_generation(out.generations_completed + 1);
  }

  run.best_fitness = best;
  run.true_evaluations_used = budget.used();
  run.convergence_cycle = convergence_cycle(run.cycle_records);
  run.acceptance_rate = acceptance_rate(run.cycle_records);
  return out;
}

RunResult run_random_recommender(const Objective& obj, SagrsConfig cfg, Rng& rng) {
  cfg.evaluation_rate = 0;
  cfg.pool_handling = PoolHandling::reset;
  return run_sagrs(obj, cfg, rng);
}

}  // namespace sagrs
