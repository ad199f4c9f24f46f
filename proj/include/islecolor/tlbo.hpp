#pragma once

#include "islecolor/budget.hpp"
#include "islecolor/coloring.hpp"
#include "islecolor/population.hpp"
#include "islecolor/rng.hpp"
#include "islecolor/tabucol.hpp"

namespace islecolor {

struct TlboParams {
  int population_size = 20;
  int generations = 1000;

  void validate() const;
};

struct ClassState {
  Population learners;
  std::size_t teacher = 0;  // index of the best learner
  int generation = 0;

  const Coloring& teacher_solution() const { return learners[teacher]; }
};

ClassState make_class_state(Population learners);

/// Greedy partition crossover. Slot c = 0..k-1 alternates between the
/// parents (p1 first); each slot takes the current parent's largest
/// remaining color class (lowest class index on ties) and those vertices are
/// removed from both parents. Vertices left over get uniform random colors.
/// Throws ParameterError if the parents differ in graph or k.
Coloring partition_crossover(const Coloring& p1, const Coloring& p2, Rng& rng);

/// Every learner other than the teacher is recombined with the teacher and
/// refined by TabuCol; the child replaces the learner unless it is worse.
bool teacher_phase(ClassState& state, const TabuParams& tabu, Rng& rng, SearchBudget& budget);

/// population_size times: two distinct random learners are recombined and
/// refined; the child replaces the worst learner unless it is worse.
bool learner_phase(ClassState& state, const TabuParams& tabu, Rng& rng, SearchBudget& budget);

void tlbo_generation(ClassState& state, const TabuParams& tabu, Rng& rng, SearchBudget& budget);

}  // namespace islecolor
