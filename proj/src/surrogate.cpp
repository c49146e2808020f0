#include "sagrs/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sagrs/error.hpp"
#include "sagrs/linalg.hpp"

namespace sagrs {

using detail::require;
using linalg::Matrix;

double distance(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), "distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

// ---------------------------------------------------------------------------
// EvaluatedPool

EvaluatedPool::EvaluatedPool(double duplicate_tolerance) : tolerance_(duplicate_tolerance) {
  require(duplicate_tolerance >= 0.0, "EvaluatedPool: negative duplicate tolerance");
}

bool EvaluatedPool::has_item_within(std::span<const double> point, double radius) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](const Item& it) { return distance(it.point, point) <= radius; });
}

bool EvaluatedPool::insert(Point point, double fitness) {
  if (!items_.empty())
    require(point.size() == items_.front().point.size(), "EvaluatedPool: dimension mismatch");
  if (has_item_within(point, tolerance_)) return false;
  items_.push_back(Item{std::move(point), fitness});
  return true;
}

double EvaluatedPool::best_fitness() const {
  require(!items_.empty(), "EvaluatedPool::best_fitness on empty pool");
  double best = *items_.front().fitness;
  for (const auto& it : items_) best = std::min(best, *it.fitness);
  return best;
}

double EvaluatedPool::worst_fitness() const {
  require(!items_.empty(), "EvaluatedPool::worst_fitness on empty pool");
  double worst = *items_.front().fitness;
  for (const auto& it : items_) worst = std::max(worst, *it.fitness);
  return worst;
}

// ---------------------------------------------------------------------------
// Model kind

std::string_view to_string(ModelKind kind) noexcept {
  return kind == ModelKind::lsm ? "lsm" : "rbf";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "lsm") return ModelKind::lsm;
  if (name == "rbf") return ModelKind::rbf;
  throw ConfigError("unknown model kind '" + std::string(name) + "' (expected lsm or rbf)");
}

namespace {

double fitness_of(const Item& item) {
  if (!item.fitness) throw FitError("training item has no fitness");
  return *item.fitness;
}

std::size_t dimension_of(std::span<const Item> items) {
  const std::size_t d = items.front().point.size();
  for (const auto& it : items) require(it.point.size() == d, "surrogate: mixed dimensions");
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Least squares polynomial

LsmModel fit_lsm(std::span<const Item> items) {
  if (items.empty()) throw FitError("fit_lsm: empty pool");
  const std::size_t d = dimension_of(items);
  const std::size_t p = 2 * d + 1;
  const std::size_t n = items.size();
  if (n < p)
    throw FitError("fit_lsm: need at least " + std::to_string(p) + " items, got " +
                   std::to_string(n));

  // Features are built on centred, scaled coordinates z = (x - c) / s and the
  // coefficients mapped back afterwards. Same least-squares solution, but the
  // normal equations stay well scaled for domains like [-500, 500].
  std::vector<double> centre(d, 0.0);
  std::vector<double> spread(d, 0.0);
  for (const auto& it : items)
    for (std::size_t i = 0; i < d; ++i) centre[i] += it.point[i];
  for (auto& c : centre) c /= static_cast<double>(n);
  for (const auto& it : items)
    for (std::size_t i = 0; i < d; ++i) spread[i] = std::max(spread[i], std::abs(it.point[i] - centre[i]));
  for (std::size_t i = 0; i < d; ++i)
    if (!(spread[i] > 0.0)) throw FitError("fit_lsm: all items share coordinate " + std::to_string(i));

  Matrix x(n, p);
  Matrix y(n, 1);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = x.row(r);
    row[0] = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double z = (items[r].point[i] - centre[i]) / spread[i];
      row[1 + i] = z;
      row[1 + d + i] = z * z;
    }
    y(r, 0) = fitness_of(items[r]);
  }

  const Matrix xt = linalg::transpose(x);
  Matrix b(1, 1);
  try {
    b = linalg::solve(linalg::mat_mul(xt, x), linalg::mat_mul(xt, y));
  } catch (const SingularMatrixError& e) {
    throw FitError(std::string("fit_lsm: ") + e.what());
  }

  LsmModel model;
  model.theta.assign(p, 0.0);
  double b0 = b(0, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const double lin = b(1 + i, 0);
    const double quad = b(1 + d + i, 0);
    const double c = centre[i];
    const double s = spread[i];
    model.theta[1 + d + i] = quad / (s * s);
    model.theta[1 + i] = lin / s - 2.0 * c * quad / (s * s);
    b0 += -lin * c / s + quad * c * c / (s * s);
  }
  model.theta[0] = b0;
  return model;
}

double predict_lsm(const LsmModel& model, std::span<const double> point) {
  const std::size_t d = model.dimension();
  require(point.size() == d, "predict_lsm: point has wrong dimension");
  double y = model.theta[0];
  for (std::size_t i = 0; i < d; ++i)
    y += model.theta[1 + i] * point[i] + model.theta[1 + d + i] * point[i] * point[i];
  return y;
}

// ---------------------------------------------------------------------------
// Radial basis function network

double rbf_activation(double r, double sigma) noexcept {
  return -std::expm1(-(r * r) / (2.0 * sigma * sigma));
}

double compute_sigma(std::span<const Item> items) {
  const std::size_t n = items.size();
  if (n < 2) throw FitError("compute_sigma: need at least two items");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += distance(items[i].point, items[j].point);
  return sum / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

RbfModel fit_rbf(std::span<const Item> items) {
  const std::size_t n = items.size();
  if (n < 2) throw FitError("fit_rbf: need at least two items");
  dimension_of(items);

  RbfModel model;
  model.sigma = compute_sigma(items);
  if (!(model.sigma > 0.0)) throw FitError("fit_rbf: all items coincide");

  Matrix phi(n, n);
  Matrix targets(n, 1);
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    targets(i, 0) = fitness_of(items[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = rbf_activation(distance(items[i].point, items[j].point), model.sigma);
      phi(i, j) = v;
      phi(j, i) = v;
      abs_sum += 2.0 * v;
    }
  }

  Matrix w(1, 1);
  try {
    w = linalg::solve(phi, targets);
  } catch (const SingularMatrixError&) {
    // The diagonal of phi is identically zero, so the shift is scaled by the
    // mean entry magnitude rather than the trace.
    const double lambda = 1e-8 * abs_sum / (static_cast<double>(n) * static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) phi(i, i) += lambda;
    try {
      w = linalg::solve(std::move(phi), targets);
    } catch (const SingularMatrixError& e) {
      throw FitError(std::string("fit_rbf: singular even after ridge shift: ") + e.what());
    }
    model.ridge_applied = true;
  }

  model.centers.reserve(n);
  for (const auto& it : items) model.centers.push_back(it.point);
  model.weights.assign(w.entries().begin(), w.entries().end());
  return model;
}

double predict_rbf(const RbfModel& model, std::span<const double> point) {
  double y = 0.0;
  for (std::size_t k = 0; k < model.centers.size(); ++k)
    y += model.weights[k] * rbf_activation(distance(point, model.centers[k]), model.sigma);
  return y;
}

// ---------------------------------------------------------------------------
// Dispatch

MetaModel fit(ModelKind kind, std::span<const Item> items) {
  if (kind == ModelKind::lsm) return fit_lsm(items);
  return fit_rbf(items);
}

double predict(const MetaModel& model, std::span<const double> point) {
  struct Visitor {
    std::span<const double> p;
    double operator()(const LsmModel& m) const { return predict_lsm(m, p); }
    double operator()(const RbfModel& m) const { return predict_rbf(m, p); }
    double operator()(const MeanModel& m) const { return m.mean; }
  };
  return std::visit(Visitor{point}, model);
}

FittedModel fit_with_fallback(ModelKind kind, std::span<const Item> items) {
  try {
    return {fit(kind, items), true};
  } catch (const FitError&) {
    double mean = 0.0;
    std::size_t count = 0;
    for (const auto& it : items) {
      if (!it.fitness) continue;
      mean += *it.fitness;
      ++count;
    }
    return {MeanModel{count ? mean / static_cast<double>(count) : 0.0}, false};
  }
}

}  // namespace sagrs
