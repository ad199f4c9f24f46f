#include "islecolor/tlbo.hpp"

#include <array>

namespace islecolor {

void TlboParams::validate() const {
  if (population_size < 2) throw ParameterError("TLBO population_size must be >= 2");
  if (generations < 1) throw ParameterError("TLBO generations must be >= 1");
}

ClassState make_class_state(Population learners) {
  if (learners.size() < 2) throw ParameterError("TLBO needs at least two learners");
  const std::size_t teacher = best_index(learners);
  return ClassState{std::move(learners), teacher, 0};
}

Coloring partition_crossover(const Coloring& p1, const Coloring& p2, Rng& rng) {
  if (p1.k() != p2.k() || &p1.graph() != &p2.graph()) {
    throw ParameterError("partition crossover needs parents on the same graph and k");
  }
  const int n = p1.vertex_count();
  const int k = p1.k();
  const std::array<const Coloring*, 2> parents{&p1, &p2};

  // members[p][c]: vertices of class c in parent p; remaining[p][c]: how many
  // of them are still unassigned in the child.
  std::array<std::vector<std::vector<int>>, 2> members;
  std::array<std::vector<int>, 2> remaining;
  for (std::size_t p = 0; p < 2; ++p) {
    members[p].assign(static_cast<std::size_t>(k), {});
    remaining[p].assign(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) {
      const auto c = static_cast<std::size_t>(parents[p]->color(v));
      members[p][c].push_back(v);
      ++remaining[p][c];
    }
  }

  std::vector<int> child(static_cast<std::size_t>(n), -1);
  for (int slot = 0; slot < k; ++slot) {
    const std::size_t p = static_cast<std::size_t>(slot % 2);
    std::size_t pick = 0;
    for (std::size_t c = 1; c < static_cast<std::size_t>(k); ++c) {
      if (remaining[p][c] > remaining[p][pick]) pick = c;
    }
    if (remaining[p][pick] == 0) break;
    for (int v : members[p][pick]) {
      if (child[static_cast<std::size_t>(v)] >= 0) continue;
      child[static_cast<std::size_t>(v)] = slot;
      --remaining[0][static_cast<std::size_t>(p1.color(v))];
      --remaining[1][static_cast<std::size_t>(p2.color(v))];
    }
  }
  for (int& c : child) {
    if (c < 0) c = uniform_int(rng, 0, k - 1);
  }
  return Coloring(p1.graph(), k, std::move(child));
}

bool teacher_phase(ClassState& state, const TabuParams& tabu, Rng& rng, SearchBudget& budget) {
  bool completed = true;
  const std::size_t teacher = state.teacher;
  for (std::size_t i = 0; i < state.learners.size(); ++i) {
    if (i == teacher) continue;
    if (!budget.try_consume()) {
      completed = false;
      break;
    }
    Coloring child = tabucol(partition_crossover(state.learners[teacher], state.learners[i], rng),
                             tabu, rng, budget.deadline());
    budget.report(child.conflicts());
    if (child.conflicts() <= state.learners[i].conflicts()) state.learners[i] = std::move(child);
  }
  state.teacher = best_index(state.learners);
  return completed;
}

bool learner_phase(ClassState& state, const TabuParams& tabu, Rng& rng, SearchBudget& budget) {
  bool completed = true;
  const int size = static_cast<int>(state.learners.size());
  for (int draw = 0; draw < size; ++draw) {
    if (!budget.try_consume()) {
      completed = false;
      break;
    }
    const auto pair = sample_distinct(rng, size, 2);
    Coloring child = tabucol(partition_crossover(state.learners[static_cast<std::size_t>(pair[0])],
                                                 state.learners[static_cast<std::size_t>(pair[1])], rng),
                             tabu, rng, budget.deadline());
    budget.report(child.conflicts());
    const std::size_t worst = worst_index(state.learners);
    if (child.conflicts() <= state.learners[worst].conflicts()) state.learners[worst] = std::move(child);
  }
  state.teacher = best_index(state.learners);
  return completed;
}

void tlbo_generation(ClassState& state, const TabuParams& tabu, Rng& rng, SearchBudget& budget) {
  if (teacher_phase(state, tabu, rng, budget) && learner_phase(state, tabu, rng, budget)) {
    ++state.generation;
  }
}

}  // namespace islecolor
