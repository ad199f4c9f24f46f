#pragma once

#include <vector>

#include "islecolor/budget.hpp"
#include "islecolor/coloring.hpp"
#include "islecolor/rng.hpp"

namespace islecolor {

using Population = std::vector<Coloring>;

/// Index of the member with fewest conflicts; lowest index on ties.
std::size_t best_index(const Population& pop);
/// Index of the member with most conflicts; lowest index on ties.
std::size_t worst_index(const Population& pop);

/// Up to `size` random colorings, one budget slot each. May return fewer
/// members if the budget runs out.
Population random_population(const Graph& g, int k, int size, Rng& rng, SearchBudget& budget);

/// Copy of `receiver` where `count` uniformly chosen vertices take the
/// donor's colors.
Coloring transfer_colors(const Coloring& donor, Coloring receiver, int count, Rng& rng);

/// ceil(fraction * n) clamped to [lo, n].
int subset_size(double fraction, int n, int lo = 0);

}  // namespace islecolor
