#include "sagrs/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sagrs/error.hpp"

namespace sagrs {

namespace {

struct Domain {
  double lower;
  double upper;
};

Domain domain_of(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::bohachevsky: return {-100.0, 100.0};
    case ObjectiveKind::ackley: return {-15.0, 30.0};
    case ObjectiveKind::schwefel: return {-500.0, 500.0};
  }
  return {0.0, 0.0};
}

// Coordinate of the Schwefel minimizer, identical in every dimension.
constexpr double kSchwefelArgmin = 420.968746;
constexpr double kSchwefelOffset = 418.98288727243369;

}  // namespace

std::string_view to_string(ObjectiveKind kind) noexcept {
  switch (kind) {
    case ObjectiveKind::bohachevsky: return "bohachevsky";
    case ObjectiveKind::ackley: return "ackley";
    case ObjectiveKind::schwefel: return "schwefel";
  }
  return "unknown";
}

ObjectiveKind parse_objective_kind(std::string_view name) {
  for (auto kind : {ObjectiveKind::bohachevsky, ObjectiveKind::ackley, ObjectiveKind::schwefel})
    if (name == to_string(kind)) return kind;
  throw ConfigError("unknown objective '" + std::string(name) +
                    "' (expected bohachevsky, ackley or schwefel)");
}

double bohachevsky(std::span<const double> x) {
  using std::numbers::pi;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i];
    const double b = x[i + 1];
    sum += a * a + 2.0 * b * b - 0.3 * std::cos(3.0 * pi * a) - 0.4 * std::cos(4.0 * pi * b) + 0.7;
  }
  return sum;
}

double ackley(std::span<const double> x) {
  using std::numbers::pi;
  const double d = static_cast<double>(x.size());
  double squares = 0.0;
  double cosines = 0.0;
  for (double v : x) {
    squares += v * v;
    cosines += std::cos(2.0 * pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(squares / d)) - std::exp(cosines / d) + 20.0 +
         std::numbers::e;
}

double schwefel(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * std::sin(std::sqrt(std::abs(v)));
  return kSchwefelOffset * static_cast<double>(x.size()) - sum;
}

Objective::Objective(ObjectiveKind kind, std::size_t dimension)
    : kind_(kind), dimension_(dimension) {
  if (kind == ObjectiveKind::bohachevsky && dimension < 2)
    throw ConfigError("bohachevsky needs dimension >= 2");
  if (dimension < 1) throw ConfigError("objective dimension must be >= 1");
  const auto dom = domain_of(kind);
  lower_.assign(dimension, dom.lower);
  upper_.assign(dimension, dom.upper);
}

Point Objective::optimum() const {
  const double v = kind_ == ObjectiveKind::schwefel ? kSchwefelArgmin : 0.0;
  return Point(dimension_, v);
}

double Objective::evaluate(std::span<const double> point) const {
  detail::require(point.size() == dimension_, "evaluate: point has wrong dimension");
  switch (kind_) {
    case ObjectiveKind::bohachevsky: return bohachevsky(point);
    case ObjectiveKind::ackley: return ackley(point);
    case ObjectiveKind::schwefel: return schwefel(point);
  }
  return 0.0;
}

Point Objective::clip_to_bounds(std::span<const double> point) const {
  detail::require(point.size() == dimension_, "clip_to_bounds: point has wrong dimension");
  Point out(point.begin(), point.end());
  for (std::size_t i = 0; i < dimension_; ++i) out[i] = std::clamp(out[i], lower_[i], upper_[i]);
  return out;
}

Point Objective::sample_one(Rng& rng) const {
  Point p(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i)
    p[i] = std::uniform_real_distribution<double>(lower_[i], upper_[i])(rng);
  return p;
}

std::vector<Point> Objective::sample_uniform(Rng& rng, std::size_t n) const {
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_one(rng));
  return out;
}

Objective make_objective(std::string_view name, std::size_t dimension) {
  return Objective(parse_objective_kind(name), dimension);
}

}  // namespace sagrs
