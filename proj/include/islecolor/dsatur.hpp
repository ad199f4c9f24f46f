#pragma once

#include <vector>

#include "islecolor/graph.hpp"

namespace islecolor {

// DSATUR greedy coloring. Picks the uncolored vertex with the most distinct
// neighbor colors, then highest degree, then lowest id, and gives it the
// smallest free color. Deterministic.
std::vector<int> dsatur_coloring(const Graph& g);

// Number of colors used by dsatur_coloring. Always <= max_degree + 1.
int greedy_upper_bound(const Graph& g);

}  // namespace islecolor
