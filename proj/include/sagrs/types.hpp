#pragma once

#include <random>
#include <vector>

namespace sagrs {

/// Coordinates of an item in the search space.
using Point = std::vector<double>;

/// Every run owns one of these; nothing in the library touches global RNG state.
using Rng = std::mt19937_64;

}  // namespace sagrs
