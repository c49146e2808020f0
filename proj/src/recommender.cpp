#include "sagrs/recommender.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sagrs/error.hpp"

namespace sagrs {

using detail::require;

std::string_view to_string(PoolHandling handling) noexcept {
  return handling == PoolHandling::reset ? "reset" : "no_reset";
}

PoolHandling parse_pool_handling(std::string_view name) {
  if (name == "reset") return PoolHandling::reset;
  if (name == "no_reset" || name == "no-reset" || name == "noreset") return PoolHandling::no_reset;
  throw ConfigError("unknown pool handling '" + std::string(name) + "' (expected reset or no_reset)");
}

bool operator==(const Item& a, const Item& b) {
  return a.point == b.point && a.fitness == b.fitness;
}

bool operator==(const CycleRecord& a, const CycleRecord& b) {
  return a.cycle_index == b.cycle_index && a.suggested == b.suggested &&
         a.accepted_count == b.accepted_count &&
         a.best_true_fitness_so_far == b.best_true_fitness_so_far &&
         a.surrogate_fit_ok == b.surrogate_fit_ok;
}

void SagrsConfig::validate(const Objective& obj) const {
  ga.validate();
  if (suggestions_per_cycle < 1) throw ConfigError("suggestions_per_cycle must be >= 1");
  if (cycles < 1) throw ConfigError("cycles must be >= 1");
  const std::size_t min_pool = std::max<std::size_t>(2 * obj.dimension() + 1, 2);
  if (initial_pool_size < min_pool)
    throw ConfigError("initial_pool_size must be >= " + std::to_string(min_pool));
  if (!(exclusion_epsilon > 0.0)) throw ConfigError("exclusion_epsilon must be > 0");
}

namespace {

bool admissible(std::span<const double> p, const EvaluatedPool& pool,
                const std::vector<Point>& chosen, double eps) {
  if (pool.has_item_within(p, eps)) return false;
  return std::none_of(chosen.begin(), chosen.end(),
                      [&](const Point& c) { return distance(c, p) <= eps; });
}

}  // namespace

std::vector<Point> select_suggestions(const Population& pop, const EvaluatedPool& pool,
                                      std::size_t k, const MetaModel& model,
                                      const Objective& obj, double exclusion_epsilon, Rng& rng) {
  require(k >= 1, "select_suggestions: k must be >= 1");
  std::vector<Point> chosen;
  chosen.reserve(k);

  if (pop.size() > 0) {
    Population scored = pop;
    score_population(scored, [&](std::span<const double> p) { return predict(model, p); });
    for (const auto& cand : best_k(scored, scored.size())) {
      if (chosen.size() == k) break;
      if (admissible(cand.point, pool, chosen, exclusion_epsilon)) chosen.push_back(cand.point);
    }
  }
  while (chosen.size() < k) {
    auto p = obj.sample_one(rng);
    if (admissible(p, pool, chosen, exclusion_epsilon)) chosen.push_back(std::move(p));
  }
  return chosen;
}

std::size_t count_accepted(std::span<const Item> suggested, double worst_before) {
  return static_cast<std::size_t>(std::count_if(
      suggested.begin(), suggested.end(),
      [&](const Item& it) { return it.fitness && *it.fitness < worst_before; }));
}

std::size_t count_accepted(std::span<const Item> suggested, const EvaluatedPool& pool_before) {
  if (pool_before.empty()) return 0;
  return count_accepted(suggested, pool_before.worst_fitness());
}

std::size_t convergence_cycle(std::span<const CycleRecord> records) {
  for (std::size_t i = records.size(); i-- > 0;)
    if (records[i].accepted_count >= 1) return i + 1;
  return 0;
}

double acceptance_rate(std::span<const CycleRecord> records) {
  std::size_t accepted = 0;
  std::size_t suggested = 0;
  for (const auto& r : records) {
    accepted += r.accepted_count;
    suggested += r.suggested.size();
  }
  return suggested == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(suggested);
}

RunResult run_sagrs(const Objective& obj, const SagrsConfig& cfg, Rng& rng) {
  cfg.validate(obj);
  const double eps = cfg.exclusion_epsilon;

  RunResult result;
  EvaluatedPool pool(eps);
  double best = std::numeric_limits<double>::infinity();

  auto evaluate_into_pool = [&](Point p) -> Item {
    const double f = obj.evaluate(p);
    ++result.true_evaluations_used;
    Item item{p, f};
    result.evaluation_log.push_back(item);
    if (f < best) {
      best = f;
      result.best_point = p;
    }
    const bool inserted = pool.insert(std::move(p), f);
    require(inserted, "run_sagrs: evaluated a point inside the exclusion radius");
    return item;
  };

  while (pool.size() < cfg.initial_pool_size) {
    auto p = obj.sample_one(rng);
    if (pool.has_item_within(p, eps)) continue;
    evaluate_into_pool(std::move(p));
  }

  Population pop;
  for (std::size_t cycle = 1; cycle <= cfg.cycles; ++cycle) {
    auto training = pool.items();
    if (cfg.training_window > 0 && training.size() > cfg.training_window)
      training = training.last(cfg.training_window);
    const auto fitted = fit_with_fallback(cfg.model_kind, training);
    const FitnessFn surrogate = [&](std::span<const double> p) { return predict(fitted.model, p); };

    if (cfg.pool_handling == PoolHandling::reset || cycle == 1)
      pop = init_population(obj, cfg.ga, rng);
    else
      clear_scores(pop);

    for (std::size_t g = 0; g < cfg.evaluation_rate; ++g)
      pop = step_generation(std::move(pop), surrogate, cfg.ga, obj, rng);
    score_population(pop, surrogate);

    const auto picks =
        select_suggestions(pop, pool, cfg.suggestions_per_cycle, fitted.model, obj, eps, rng);

    const double worst_before = pool.worst_fitness();
    CycleRecord record;
    record.cycle_index = cycle;
    record.surrogate_fit_ok = fitted.ok;
    for (const auto& p : picks) record.suggested.push_back(evaluate_into_pool(p));
    record.accepted_count = count_accepted(record.suggested, worst_before);
    record.best_true_fitness_so_far = best;
    result.cycle_records.push_back(std::move(record));
  }

  result.best_fitness = best;
  result.convergence_cycle = convergence_cycle(result.cycle_records);
  result.acceptance_rate = acceptance_rate(result.cycle_records);
  return result;
}

}  // namespace sagrs
