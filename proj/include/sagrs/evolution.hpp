#pragma once

// Real-valued genetic algorithm working against an arbitrary fitness
// contract (a surrogate or the true objective). Lower scores are better.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sagrs/objectives.hpp"
#include "sagrs/types.hpp"

namespace sagrs {

struct GaConfig {
  std::size_t population_size = 50;
  double selection_factor = 0.9;    ///< fraction of the population kept as mating pool
  double mutation_prob = 0.1;       ///< per individual
  double recombination_prob = 0.05; ///< per offspring slot
  double mutation_scale = 0.05;     ///< Gaussian std as a fraction of domain width
  std::size_t elitism = 1;

  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

struct Population {
  std::vector<Point> individuals;
  std::vector<std::optional<double>> scores;  ///< parallel to individuals

  std::size_t size() const noexcept { return individuals.size(); }
  bool fully_scored() const noexcept;
};

using FitnessFn = std::function<double(std::span<const double>)>;

Population init_population(const Objective& obj, const GaConfig& cfg, Rng& rng);

/// Scores every individual that has no score yet, in index order. If the
/// contract throws, individuals scored so far keep their scores.
void score_population(Population& pop, const FitnessFn& fitness);

void clear_scores(Population& pop) noexcept;

/// ceil(selection_factor * n), clamped to [1, n].
std::size_t mating_pool_size(std::size_t n, double selection_factor);

/// One generation: score, truncate to the mating pool, refill by cloning or
/// blending random mating-pool parents, mutate, clip, and carry the elites.
/// Offspring that are unchanged clones inherit their parent's score.
Population step_generation(Population pop, const FitnessFn& fitness, const GaConfig& cfg,
                           const Objective& obj, Rng& rng);

struct Ranked {
  std::size_t index;
  Point point;
  double score;
};

/// The k lowest-scoring individuals, ascending, ties by lower index.
std::vector<Ranked> best_k(const Population& pop, std::size_t k);

}  // namespace sagrs
