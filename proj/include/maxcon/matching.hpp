#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maxcon/graph.hpp"

namespace maxcon {

// Maximum cardinality matching in a general graph (blossom contraction).
// Returns edges as pairs u < v.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

// A matching covering every vertex exactly once, or nullopt when none exists.
std::optional<std::vector<std::pair<int, int>>> perfect_matching(const Graph& g);

}  // namespace maxcon
