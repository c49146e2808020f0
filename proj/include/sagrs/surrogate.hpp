#pragma once

// Meta-models fitted to the pool of truly evaluated items: a second-order
// polynomial without cross terms (least squares) and an interpolating
// radial-basis-function network.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "sagrs/types.hpp"

namespace sagrs {

struct Item {
  Point point;
  std::optional<double> fitness;  ///< true objective value, once evaluated
};

double distance(std::span<const double> a, std::span<const double> b);

/// Items evaluated on the true objective. Serves both as surrogate training
/// data and as the set of items that may never be suggested again.
class EvaluatedPool {
 public:
  static constexpr double kDefaultDuplicateTolerance = 1e-9;

  explicit EvaluatedPool(double duplicate_tolerance = kDefaultDuplicateTolerance);

  /// Adds an evaluated item. Returns false (and leaves the pool unchanged)
  /// when an existing item lies within the duplicate tolerance.
  bool insert(Point point, double fitness);

  /// True if some pool item lies within `radius` (inclusive) of `point`.
  bool has_item_within(std::span<const double> point, double radius) const;

  std::span<const Item> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  double duplicate_tolerance() const noexcept { return tolerance_; }

  double best_fitness() const;
  double worst_fitness() const;

 private:
  double tolerance_;
  std::vector<Item> items_;
};

enum class ModelKind { lsm, rbf };

std::string_view to_string(ModelKind kind) noexcept;
/// Throws ConfigError for anything but "lsm" / "rbf".
ModelKind parse_model_kind(std::string_view name);

/// Coefficients (b0, b1..bd, b(d+1)..b(2d)) of
/// y = b0 + sum_i b_i x_i + sum_j b(d+j) x_j^2.
struct LsmModel {
  std::vector<double> theta;
  std::size_t dimension() const noexcept { return theta.empty() ? 0 : (theta.size() - 1) / 2; }
};

struct RbfModel {
  std::vector<Point> centers;
  std::vector<double> weights;
  double sigma = 1.0;
  bool ridge_applied = false;  ///< solved with a diagonal shift, so not exact at centers
};

/// Cold-start stand-in that predicts the mean pool fitness everywhere.
struct MeanModel {
  double mean = 0.0;
};

using MetaModel = std::variant<LsmModel, RbfModel, MeanModel>;

/// Minimization-adapted Gaussian: 1 - exp(-r^2 / (2 sigma^2)).
double rbf_activation(double r, double sigma) noexcept;

LsmModel fit_lsm(std::span<const Item> items);
double predict_lsm(const LsmModel& model, std::span<const double> point);

/// Mean Euclidean distance over all unordered pairs of item points.
double compute_sigma(std::span<const Item> items);

RbfModel fit_rbf(std::span<const Item> items);
double predict_rbf(const RbfModel& model, std::span<const double> point);

MetaModel fit(ModelKind kind, std::span<const Item> items);
double predict(const MetaModel& model, std::span<const double> point);

struct FittedModel {
  MetaModel model;
  bool ok = true;  ///< false when the MeanModel fallback was used
};

/// fit() that degrades to a MeanModel instead of throwing FitError.
FittedModel fit_with_fallback(ModelKind kind, std::span<const Item> items);

}  // namespace sagrs
