#pragma once

#include <vector>

#include "islecolor/budget.hpp"
#include "islecolor/coloring.hpp"
#include "islecolor/population.hpp"
#include "islecolor/rng.hpp"
#include "islecolor/tabucol.hpp"

namespace islecolor {

// Artificial bee colony over colorings. The colony holds one food source per
// member; each generation every source gets one employed-bee visit and
// `onlooker_count` extra visits go to sources picked in proportion to
// 1 / (1 + f). Sources that stop improving are abandoned to scouts.

struct AbcParams {
  int colony_size = 20;
  int onlooker_count = 10;
  int scout_count = 1;
  int abandonment_limit = 10;
  int neighbor_perturbation = 1;

  void validate() const;
};

struct FoodSource {
  Coloring solution;
  int trials = 0;  // consecutive visits without improvement
};

struct AbcState {
  std::vector<FoodSource> sources;
  Coloring best;
  int generation = 0;
};

AbcState make_abc_state(Population colony);

double source_quality(const Coloring& s);

// Roulette draw over source_quality.
std::size_t pick_onlooker_source(const std::vector<FoodSource>& sources, Rng& rng);

// One bee visit: perturb, refine with TabuCol, keep if strictly better.
// Returns false without visiting when the budget refuses a slot.
bool visit_source(FoodSource& source, const AbcParams& params, const TabuParams& tabu, Rng& rng,
                  SearchBudget& budget);

// Phases return false when cut short by the budget.
bool employed_phase(std::vector<FoodSource>& sources, const TabuParams& tabu, const AbcParams& params,
                    Rng& rng, SearchBudget& budget);

bool onlooker_phase(std::vector<FoodSource>& sources, const TabuParams& tabu, const AbcParams& params,
                    Rng& rng, SearchBudget& budget);

// Replaces up to scout_count sources with trials >= abandonment_limit
// (most trials first) by fresh random colorings. The source holding the
// colony's best f (lowest index on ties) is never abandoned.
bool scout_phase(std::vector<FoodSource>& sources, const AbcParams& params, Rng& rng,
                 SearchBudget& budget);

// Scouts, then onlookers, then employed bees; updates the global best.
void abc_generation(AbcState& state, const TabuParams& tabu, const AbcParams& params, Rng& rng,
                    SearchBudget& budget);

}  // namespace islecolor
