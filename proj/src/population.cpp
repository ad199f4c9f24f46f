#include "islecolor/population.hpp"

#include <algorithm>
#include <cmath>

namespace islecolor {

std::size_t best_index(const Population& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i].conflicts() < pop[best].conflicts()) best = i;
  }
  return best;
}

std::size_t worst_index(const Population& pop) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i].conflicts() > pop[worst].conflicts()) worst = i;
  }
  return worst;
}

Population random_population(const Graph& g, int k, int size, Rng& rng, SearchBudget& budget) {
  Population pop;
  pop.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size && budget.try_consume(); ++i) {
    pop.push_back(random_coloring(g, k, rng));
    budget.report(pop.back().conflicts());
  }
  return pop;
}

Coloring transfer_colors(const Coloring& donor, Coloring receiver, int count, Rng& rng) {
  if (donor.k() != receiver.k() || &donor.graph() != &receiver.graph()) {
    throw ParameterError("color transfer between colorings of different graphs or budgets");
  }
  for (int v : sample_distinct(rng, receiver.vertex_count(), count)) {
    receiver.recolor(v, donor.color(v));
  }
  return receiver;
}

int subset_size(double fraction, int n, int lo) {
  const int raw = static_cast<int>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
  return std::clamp(raw, std::min(lo, n), n);
}

}  // namespace islecolor
