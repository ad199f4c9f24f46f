#pragma once

#include "islecolor/budget.hpp"
#include "islecolor/coloring.hpp"
#include "islecolor/population.hpp"
#include "islecolor/rng.hpp"
#include "islecolor/tabucol.hpp"

namespace islecolor {

// Discrete Harris hawks optimization. Every phase is a transfer of colors
// from a donor onto a vertex subset of a hawk; the subset size encodes how
// strongly that phase perturbs: exploration > high-perturbation besiege >
// soft besiege > hard besiege >= minimal attack.

struct HhoParams {
  int population_size = 20;
  int generations = 1000;
  double exploration_subset_fraction = 0.1;
  double besiege_subset_fraction = 0.3;
  int minimal_subset_size = 1;

  void validate() const;
};

struct HhoState {
  Population hawks;
  Coloring rabbit;  // best hawk as of the last rabbit update
  int t = 0;        // generations completed
};

HhoState make_hho_state(Population hawks);

// E = 2 * e0 * (1 - t / T). Throws ParameterError if T < 1.
double escaping_energy(double e0, int t, int T);

Coloring exploration_transfer(const Coloring& donor, const Coloring& receiver, double fraction, Rng& rng);
Coloring exploration_from_best(const Coloring& hawk, const Coloring& rabbit, double fraction, Rng& rng);

// Surprise-jump copy: ceil((jump / 2) * fraction * n) rabbit colors, at least one.
Coloring soft_besiege(const Coloring& hawk, const Coloring& rabbit, double jump, double fraction, Rng& rng);

// Copies the rabbit's color of exactly one uniformly chosen vertex.
Coloring hard_besiege(const Coloring& hawk, const Coloring& rabbit, Rng& rng);

// One generation over all hawks. Each candidate goes through TabuCol and
// replaces its target hawk when its conflict count is not worse. Stops
// early, mid-generation, when the budget refuses a slot.
void hho_generation(HhoState& state, const HhoParams& params, const TabuParams& tabu, Rng& rng,
                    SearchBudget& budget);

}  // namespace islecolor
