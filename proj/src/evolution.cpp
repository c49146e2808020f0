#include "sagrs/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sagrs/error.hpp"

namespace sagrs {

using detail::require;

void GaConfig::validate() const {
  if (population_size < 2) throw ConfigError("GA population_size must be >= 2");
  if (!(selection_factor > 0.0 && selection_factor <= 1.0))
    throw ConfigError("GA selection_factor must be in (0, 1]");
  if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0))
    throw ConfigError("GA mutation_prob must be in [0, 1]");
  if (!(recombination_prob >= 0.0 && recombination_prob <= 1.0))
    throw ConfigError("GA recombination_prob must be in [0, 1]");
  if (!(mutation_scale >= 0.0)) throw ConfigError("GA mutation_scale must be >= 0");
  if (elitism > population_size) throw ConfigError("GA elitism exceeds population_size");
}

bool Population::fully_scored() const noexcept {
  return scores.size() == individuals.size() &&
         std::all_of(scores.begin(), scores.end(), [](const auto& s) { return s.has_value(); });
}

Population init_population(const Objective& obj, const GaConfig& cfg, Rng& rng) {
  Population pop;
  pop.individuals = obj.sample_uniform(rng, cfg.population_size);
  pop.scores.assign(pop.individuals.size(), std::nullopt);
  return pop;
}

void score_population(Population& pop, const FitnessFn& fitness) {
  pop.scores.resize(pop.individuals.size());
  for (std::size_t i = 0; i < pop.individuals.size(); ++i)
    if (!pop.scores[i]) pop.scores[i] = fitness(pop.individuals[i]);
}

void clear_scores(Population& pop) noexcept {
  pop.scores.assign(pop.individuals.size(), std::nullopt);
}

std::size_t mating_pool_size(std::size_t n, double selection_factor) {
  // The small offset keeps products like 0.9 * 10 from rounding up to 10.
  const auto k = static_cast<std::size_t>(std::ceil(selection_factor * static_cast<double>(n) - 1e-9));
  return std::clamp<std::size_t>(k, 1, n);
}

namespace {

// Indices sorted by ascending score, ties by index.
std::vector<std::size_t> ranking(const Population& pop) {
  std::vector<std::size_t> order(pop.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return *pop.scores[a] < *pop.scores[b];
  });
  return order;
}

}  // namespace

Population step_generation(Population pop, const FitnessFn& fitness, const GaConfig& cfg,
                           const Objective& obj, Rng& rng) {
  require(pop.size() > 0, "step_generation: empty population");
  score_population(pop, fitness);

  const std::size_t n = pop.size();
  const auto order = ranking(pop);
  const std::size_t mating = mating_pool_size(n, cfg.selection_factor);
  const std::size_t elites = std::min(cfg.elitism, n);

  Population next;
  next.individuals.reserve(n);
  next.scores.reserve(n);

  // Elites keep their relative order so a fully elitist step is a no-op.
  std::vector<std::size_t> elite_idx(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(elites));
  std::sort(elite_idx.begin(), elite_idx.end());
  for (auto i : elite_idx) {
    next.individuals.push_back(pop.individuals[i]);
    next.scores.push_back(pop.scores[i]);
  }

  std::uniform_int_distribution<std::size_t> pick(0, mating - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto lower = obj.lower();
  const auto upper = obj.upper();

  while (next.size() < n) {
    // Ranks into `order`, so the smaller rank is the better parent.
    const std::size_t ra = pick(rng);
    const std::size_t rb = pick(rng);
    const auto& a = pop.individuals[order[ra]];
    const auto& b = pop.individuals[order[rb]];

    Point child;
    std::optional<double> score;
    if (unit(rng) < cfg.recombination_prob) {
      child.resize(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double w = unit(rng);
        child[i] = w * a[i] + (1.0 - w) * b[i];
      }
    } else {
      const std::size_t better = std::min(ra, rb);
      child = pop.individuals[order[better]];
      score = pop.scores[order[better]];
    }

    if (unit(rng) < cfg.mutation_prob) {
      for (std::size_t i = 0; i < child.size(); ++i)
        child[i] += gauss(rng) * cfg.mutation_scale * (upper[i] - lower[i]);
      score.reset();
    }
    child = obj.clip_to_bounds(child);

    next.individuals.push_back(std::move(child));
    next.scores.push_back(score);
  }
  return next;
}

std::vector<Ranked> best_k(const Population& pop, std::size_t k) {
  require(k >= 1, "best_k: k must be >= 1");
  require(k <= pop.size(), "best_k: k exceeds population size");
  require(pop.fully_scored(), "best_k: population is not fully scored");
  const auto order = ranking(pop);
  std::vector<Ranked> out;
  out.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto i = order[r];
    out.push_back({i, pop.individuals[i], *pop.scores[i]});
  }
  return out;
}

}  // namespace sagrs
