#include "islecolor/hho.hpp"

#include <algorithm>
#include <cmath>

namespace islecolor {

void HhoParams::validate() const {
  if (population_size < 2) throw ParameterError("HHO population_size must be >= 2");
  if (generations < 1) throw ParameterError("HHO generations must be >= 1");
  for (double f : {exploration_subset_fraction, besiege_subset_fraction}) {
    if (!(f > 0.0 && f <= 1.0)) throw ParameterError("HHO subset fractions must lie in (0, 1]");
  }
  if (minimal_subset_size < 1) throw ParameterError("HHO minimal_subset_size must be >= 1");
}

HhoState make_hho_state(Population hawks) {
  if (hawks.empty()) throw ParameterError("HHO needs at least one hawk");
  Coloring rabbit = hawks[best_index(hawks)];
  return HhoState{std::move(hawks), std::move(rabbit), 0};
}

double escaping_energy(double e0, int t, int T) {
  if (T < 1) throw ParameterError("escaping energy needs T >= 1");
  return 2.0 * e0 * (1.0 - static_cast<double>(t) / static_cast<double>(T));
}

Coloring exploration_transfer(const Coloring& donor, const Coloring& receiver, double fraction, Rng& rng) {
  return transfer_colors(donor, receiver, subset_size(fraction, receiver.vertex_count()), rng);
}

Coloring exploration_from_best(const Coloring& hawk, const Coloring& rabbit, double fraction, Rng& rng) {
  return exploration_transfer(rabbit, hawk, fraction, rng);
}

Coloring soft_besiege(const Coloring& hawk, const Coloring& rabbit, double jump, double fraction, Rng& rng) {
  const int count = subset_size(jump / 2.0 * fraction, hawk.vertex_count(), 1);
  return transfer_colors(rabbit, hawk, count, rng);
}

Coloring hard_besiege(const Coloring& hawk, const Coloring& rabbit, Rng& rng) {
  return transfer_colors(rabbit, hawk, 1, rng);
}

void hho_generation(HhoState& state, const HhoParams& params, const TabuParams& tabu, Rng& rng,
                    SearchBudget& budget) {
  auto& hawks = state.hawks;
  const int n = hawks.empty() ? 0 : hawks.front().vertex_count();
  const int last = static_cast<int>(hawks.size()) - 1;
  const int t = std::min(state.t, params.generations);

  for (std::size_t i = 0; i < hawks.size(); ++i) {
    if (!budget.try_consume()) {
      state.rabbit = hawks[best_index(hawks)];
      return;
    }

    const double e0 = uniform_real(rng, -1.0, 1.0);
    const double energy = std::abs(escaping_energy(e0, t, params.generations));
    std::size_t target = i;
    Coloring candidate = [&] {
      if (energy >= 1.0) {
        const double q = uniform_real(rng, 0.0, 1.0);
        if (q < 0.5) {
          const auto peer = static_cast<std::size_t>(uniform_int(rng, 0, last));
          return exploration_transfer(hawks[peer], hawks[i], params.exploration_subset_fraction, rng);
        }
        return exploration_from_best(hawks[i], state.rabbit, params.exploration_subset_fraction, rng);
      }
      const double r = uniform_real(rng, 0.0, 1.0);
      if (r >= 0.5 && energy >= 0.5) {
        const double jump = uniform_real(rng, 0.0, 2.0);
        return soft_besiege(hawks[i], state.rabbit, jump, params.exploration_subset_fraction, rng);
      }
      if (r >= 0.5) {
        return hard_besiege(hawks[i], state.rabbit, rng);
      }
      if (energy >= 0.5) {
        return transfer_colors(state.rabbit, hawks[i], subset_size(params.besiege_subset_fraction, n, 1), rng);
      }
      target = static_cast<std::size_t>(uniform_int(rng, 0, last));
      return transfer_colors(state.rabbit, hawks[target], params.minimal_subset_size, rng);
    }();

    candidate = tabucol(std::move(candidate), tabu, rng, budget.deadline());
    budget.report(candidate.conflicts());
    if (candidate.conflicts() <= hawks[target].conflicts()) {
      hawks[target] = std::move(candidate);
    }
  }

  state.rabbit = hawks[best_index(hawks)];
  ++state.t;
}

}  // namespace islecolor
