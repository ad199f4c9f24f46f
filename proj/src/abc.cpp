#include "islecolor/abc.hpp"

#include <algorithm>
#include <numeric>

namespace islecolor {

void AbcParams::validate() const {
  if (colony_size < 1) throw ParameterError("ABC colony_size must be >= 1");
  if (onlooker_count < 1) throw ParameterError("ABC onlooker_count must be >= 1");
  if (scout_count < 1) throw ParameterError("ABC scout_count must be >= 1");
  if (abandonment_limit < 1) throw ParameterError("ABC abandonment_limit must be >= 1");
  if (neighbor_perturbation < 1) throw ParameterError("ABC neighbor_perturbation must be >= 1");
}

namespace {

std::size_t best_source(const std::vector<FoodSource>& sources) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sources.size(); ++i) {
    if (sources[i].solution.conflicts() < sources[best].solution.conflicts()) best = i;
  }
  return best;
}

Coloring neighbor_of(const Coloring& s, int count, Rng& rng) {
  Coloring out = s;
  const int k = s.k();
  if (k < 2) return out;
  std::vector<int> chosen;
  const auto critical = s.conflicting_vertices();
  if (!critical.empty()) {
    for (int i : sample_distinct(rng, static_cast<int>(critical.size()), count)) {
      chosen.push_back(critical[static_cast<std::size_t>(i)]);
    }
  } else {
    chosen = sample_distinct(rng, s.vertex_count(), count);
  }
  for (int v : chosen) {
    int c = uniform_int(rng, 0, k - 2);
    if (c >= out.color(v)) ++c;
    out.recolor(v, c);
  }
  return out;
}

}  // namespace

AbcState make_abc_state(Population colony) {
  if (colony.empty()) throw ParameterError("ABC needs at least one food source");
  Coloring best = colony[best_index(colony)];
  std::vector<FoodSource> sources;
  sources.reserve(colony.size());
  for (auto& s : colony) sources.push_back(FoodSource{std::move(s), 0});
  return AbcState{std::move(sources), std::move(best), 0};
}

double source_quality(const Coloring& s) {
  return 1.0 / (1.0 + static_cast<double>(s.conflicts()));
}

std::size_t pick_onlooker_source(const std::vector<FoodSource>& sources, Rng& rng) {
  std::vector<double> weights;
  weights.reserve(sources.size());
  for (const auto& s : sources) weights.push_back(source_quality(s.solution));
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  return pick(rng);
}

bool visit_source(FoodSource& source, const AbcParams& params, const TabuParams& tabu, Rng& rng,
                  SearchBudget& budget) {
  if (source.solution.conflicts() == 0) {
    ++source.trials;
    return true;
  }
  if (!budget.try_consume()) return false;
  Coloring candidate = neighbor_of(source.solution, params.neighbor_perturbation, rng);
  candidate = tabucol(std::move(candidate), tabu, rng, budget.deadline());
  budget.report(candidate.conflicts());
  if (candidate.conflicts() < source.solution.conflicts()) {
    source.solution = std::move(candidate);
    source.trials = 0;
  } else {
    ++source.trials;
  }
  return true;
}

bool employed_phase(std::vector<FoodSource>& sources, const TabuParams& tabu, const AbcParams& params,
                    Rng& rng, SearchBudget& budget) {
  for (auto& source : sources) {
    if (!visit_source(source, params, tabu, rng, budget)) return false;
  }
  return true;
}

bool onlooker_phase(std::vector<FoodSource>& sources, const TabuParams& tabu, const AbcParams& params,
                    Rng& rng, SearchBudget& budget) {
  if (sources.empty()) return true;
  for (int bee = 0; bee < params.onlooker_count; ++bee) {
    // Weights are recomputed per bee since earlier visits may improve sources.
    if (!visit_source(sources[pick_onlooker_source(sources, rng)], params, tabu, rng, budget)) return false;
  }
  return true;
}

bool scout_phase(std::vector<FoodSource>& sources, const AbcParams& params, Rng& rng,
                 SearchBudget& budget) {
  if (sources.empty()) return true;
  const std::size_t keep = best_source(sources);
  std::vector<std::size_t> stale;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (i != keep && sources[i].trials >= params.abandonment_limit) stale.push_back(i);
  }
  std::stable_sort(stale.begin(), stale.end(), [&](std::size_t a, std::size_t b) {
    return sources[a].trials > sources[b].trials;
  });
  const std::size_t replace = std::min(stale.size(), static_cast<std::size_t>(params.scout_count));
  for (std::size_t j = 0; j < replace; ++j) {
    if (!budget.try_consume()) return false;
    auto& source = sources[stale[j]];
    source.solution = random_coloring(source.solution.graph(), source.solution.k(), rng);
    source.trials = 0;
    budget.report(source.solution.conflicts());
  }
  return true;
}

void abc_generation(AbcState& state, const TabuParams& tabu, const AbcParams& params, Rng& rng,
                    SearchBudget& budget) {
  const bool completed = scout_phase(state.sources, params, rng, budget) &&
                         onlooker_phase(state.sources, tabu, params, rng, budget) &&
                         employed_phase(state.sources, tabu, params, rng, budget);

  const auto& leader = state.sources[best_source(state.sources)].solution;
  if (leader.conflicts() < state.best.conflicts()) state.best = leader;
  if (completed) ++state.generation;
}

}  // namespace islecolor
