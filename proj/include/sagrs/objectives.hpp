#pragma once

// Benchmark functions standing in for the user's true preference. All are
// minimized, with optimum value 0.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sagrs/types.hpp"

namespace sagrs {

enum class ObjectiveKind { bohachevsky, ackley, schwefel };

std::string_view to_string(ObjectiveKind kind) noexcept;
/// Throws ConfigError for unknown names.
ObjectiveKind parse_objective_kind(std::string_view name);

class Objective {
 public:
  /// Box-constrained objective with the conventional domain for `kind`.
  /// Bohachevsky needs dimension >= 2, the others >= 1.
  Objective(ObjectiveKind kind, std::size_t dimension = 2);

  ObjectiveKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }
  std::size_t dimension() const noexcept { return dimension_; }
  std::span<const double> lower() const noexcept { return lower_; }
  std::span<const double> upper() const noexcept { return upper_; }

  /// Known global minimizer (the point where the value is ~0).
  Point optimum() const;

  double evaluate(std::span<const double> point) const;
  Point clip_to_bounds(std::span<const double> point) const;
  std::vector<Point> sample_uniform(Rng& rng, std::size_t n) const;
  Point sample_one(Rng& rng) const;

 private:
  ObjectiveKind kind_;
  std::size_t dimension_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

Objective make_objective(std::string_view name, std::size_t dimension = 2);

double bohachevsky(std::span<const double> x);
double ackley(std::span<const double> x);
double schwefel(std::span<const double> x);

}  // namespace sagrs
