#include <gtest/gtest.h>

#include <cmath>

#include "islecolor/abc.hpp"
#include "islecolor/dimacs.hpp"
#include "test_support.hpp"

using namespace islecolor;
using namespace testing_support;

namespace {

std::vector<FoodSource> sources_from(const Population& pop) {
  std::vector<FoodSource> out;
  for (const auto& s : pop) out.push_back(FoodSource{s, 0});
  return out;
}

Graph disjoint_edges(int count) {
  std::vector<Edge> e;
  for (int i = 0; i < count; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return Graph::from_edges(2 * count, e);
}

// Coloring of a perfect matching with exactly f monochromatic edges.
Coloring with_conflicts(const Graph& g, int f) {
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count() / 2; ++i) {
    colors[static_cast<std::size_t>(2 * i)] = 0;
    colors[static_cast<std::size_t>(2 * i + 1)] = i < f ? 0 : 1;
  }
  return Coloring(g, 2, colors);
}

}  // namespace

TEST(AbcParams, Validation) {
  AbcParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(p.onlooker_count, p.colony_size / 2);
  p.scout_count = 0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = AbcParams{};
  p.abandonment_limit = 0;
  EXPECT_THROW(p.validate(), ParameterError);
}

TEST(EmployedPhase, ProperSourceSurvivesWithTrialIncrement) {
  const Graph g = complete_graph(3);
  const Coloring proper(g, 3, {0, 1, 2});
  std::vector<FoodSource> sources{{proper, 2}};
  Rng rng(1);
  SearchBudget budget;
  EXPECT_TRUE(employed_phase(sources, TabuParams{}, AbcParams{}, rng, budget));
  EXPECT_EQ(sources[0].solution, proper);
  EXPECT_EQ(sources[0].trials, 3);
}

// In K(3,3) with two colors f = a*b + (3-a)(3-b), where a and b count the
// color-0 vertices per side, so no coloring has f = 1 or 2. The closest
// start is f = 3: a proper coloring with one vertex flipped.
TEST(EmployedPhase, K33NearProperSourceIsRepaired) {
  const Graph g = complete_bipartite(3, 3);
  int solved = 0;
  const AbcParams params;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    std::vector<int> colors{0, 0, 0, 1, 1, 1};
    colors[static_cast<std::size_t>(uniform_int(rng, 0, 5))] ^= 1;
    const Coloring start(g, 2, colors);
    ASSERT_EQ(start.conflicts(), 3);
    std::vector<FoodSource> sources{{start, 0}};
    SearchBudget budget;
    for (int visit = 0; visit < params.abandonment_limit && sources[0].solution.conflicts() > 0; ++visit)
      employed_phase(sources, TabuParams{}, params, rng, budget);
    if (recount(g, to_vector(sources[0].solution)) == 0) ++solved;
  }
  EXPECT_GE(solved, 95);
}

TEST(VisitSource, TrialsCountConsecutiveFailures) {
  // K4 with 3 colors can never go below f = 1, so every visit fails.
  const Graph g = complete_graph(4);
  Coloring start(g, 3, {0, 1, 2, 2});
  FoodSource source{start, 0};
  AbcParams params;
  TabuParams tabu;
  tabu.nbmax = 50;
  Rng rng(3);
  SearchBudget budget;
  for (int i = 1; i <= 7; ++i) {
    ASSERT_TRUE(visit_source(source, params, tabu, rng, budget));
    EXPECT_EQ(source.trials, i);
    EXPECT_EQ(source.solution.conflicts(), 1);
  }
  EXPECT_EQ(budget.evaluations(), 7U);

  // An improving visit resets the counter.
  const Graph p = path_graph(6);
  FoodSource bad{Coloring(p, 2, {0, 0, 0, 0, 0, 0}), 4};
  ASSERT_TRUE(visit_source(bad, params, TabuParams{}, rng, budget));
  EXPECT_EQ(bad.solution.conflicts(), 0);
  EXPECT_EQ(bad.trials, 0);
}

TEST(VisitSource, RefusedSlotLeavesSourceAlone) {
  const Graph g = complete_graph(4);
  FoodSource source{Coloring(g, 3, {0, 0, 0, 0}), 2};
  const Coloring before = source.solution;
  Rng rng(1);
  SearchBudget budget(0, {}, false);
  EXPECT_FALSE(visit_source(source, AbcParams{}, TabuParams{}, rng, budget));
  EXPECT_EQ(source.solution, before);
  EXPECT_EQ(source.trials, 2);
}

TEST(OnlookerSelection, UniformWhenQualitiesEqual) {
  const Graph g = disjoint_edges(10);
  const int sources_n = 8;
  std::vector<FoodSource> sources;
  for (int i = 0; i < sources_n; ++i) sources.push_back(FoodSource{with_conflicts(g, 4), 0});
  Rng rng(42);
  const int draws = 16000;
  std::vector<int> counts(sources_n, 0);
  for (int i = 0; i < draws; ++i) ++counts[pick_onlooker_source(sources, rng)];
  const double expected = static_cast<double>(draws) / sources_n;
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // chi-square with 7 degrees of freedom: mean 7, sd sqrt(14); 3 sigma above.
  EXPECT_LT(chi2, 7.0 + 3.0 * std::sqrt(14.0));
}

TEST(OnlookerSelection, ProperSourceDominates) {
  const Graph g = disjoint_edges(100);
  const int others = 9;
  std::vector<FoodSource> sources;
  sources.push_back(FoodSource{with_conflicts(g, 0), 0});
  for (int i = 0; i < others; ++i) sources.push_back(FoodSource{with_conflicts(g, 100), 0});
  ASSERT_EQ(sources[1].solution.conflicts(), 100);

  // Exact share: 1 / (1 + others / 101).
  double total = 0;
  for (const auto& s : sources) total += source_quality(s.solution);
  const double share = source_quality(sources[0].solution) / total;
  EXPECT_NEAR(share, 1.0 / (1.0 + others / 101.0), 1e-12);
  EXPECT_GT(share, 0.9);

  Rng rng(7);
  const int draws = 20000;
  int hits = 0;
  for (int i = 0; i < draws; ++i) hits += pick_onlooker_source(sources, rng) == 0 ? 1 : 0;
  const double sd = std::sqrt(share * (1 - share) / draws);
  EXPECT_NEAR(static_cast<double>(hits) / draws, share, 4 * sd);
}

TEST(OnlookerPhase, NoSourceWorsens) {
  const Graph g = random_graph(30, 0.4, 5);
  TabuParams tabu;
  tabu.nbmax = 100;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    Population pop;
    for (int i = 0; i < 6; ++i) pop.push_back(random_coloring(g, 4, rng));
    auto sources = sources_from(pop);
    SearchBudget budget;
    AbcParams params;
    params.onlooker_count = 12;
    ASSERT_TRUE(onlooker_phase(sources, tabu, params, rng, budget));
    for (std::size_t i = 0; i < sources.size(); ++i) {
      EXPECT_LE(sources[i].solution.conflicts(), pop[i].conflicts());
      EXPECT_TRUE(matches_recount(sources[i].solution));
    }
  }
}

TEST(ScoutPhase, Examples) {
  const Graph g = random_graph(25, 0.5, 9);
  Rng rng(4);
  AbcParams params;
  Population pop;
  for (int i = 0; i < 5; ++i) pop.push_back(random_coloring(g, 3, rng));
  auto sources = sources_from(pop);
  for (auto& s : sources) s.trials = params.abandonment_limit - 1;
  SearchBudget budget;
  ASSERT_TRUE(scout_phase(sources, params, rng, budget));
  for (std::size_t i = 0; i < sources.size(); ++i) EXPECT_EQ(sources[i].solution, pop[i]);
  EXPECT_EQ(budget.evaluations(), 0U);

  // Make the worst source stale; it must be the one replaced.
  const std::size_t stale = worst_index(pop);
  sources[stale].trials = params.abandonment_limit + 3;
  ASSERT_TRUE(scout_phase(sources, params, rng, budget));
  EXPECT_EQ(budget.evaluations(), 1U);
  EXPECT_EQ(sources[stale].trials, 0);
  EXPECT_TRUE(matches_recount(sources[stale].solution));
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (i != stale) EXPECT_EQ(sources[i].solution, pop[i]);
}

TEST(ScoutPhase, BestSourceNeverAbandoned) {
  const Graph g = random_graph(25, 0.5, 19);
  Rng rng(6);
  AbcParams params;
  params.scout_count = 10;
  Population pop;
  for (int i = 0; i < 5; ++i) pop.push_back(random_coloring(g, 3, rng));
  auto sources = sources_from(pop);
  for (auto& s : sources) s.trials = 100;
  const std::size_t best = best_index(pop);
  SearchBudget budget;
  ASSERT_TRUE(scout_phase(sources, params, rng, budget));
  EXPECT_EQ(budget.evaluations(), 4U);
  EXPECT_EQ(sources[best].solution, pop[best]);
  EXPECT_EQ(sources[best].trials, 100);
}

TEST(ScoutPhase, MostTrialsFirst) {
  const Graph g = random_graph(25, 0.5, 29);
  Rng rng(8);
  AbcParams params;
  params.scout_count = 1;
  Population pop;
  for (int i = 0; i < 4; ++i) pop.push_back(random_coloring(g, 3, rng));
  auto sources = sources_from(pop);
  const std::size_t best = best_index(pop);
  std::size_t target = (best + 1) % 4;
  std::size_t other = (best + 2) % 4;
  sources[target].trials = 30;
  sources[other].trials = 20;
  SearchBudget budget;
  ASSERT_TRUE(scout_phase(sources, params, rng, budget));
  EXPECT_EQ(sources[target].trials, 0);
  EXPECT_EQ(sources[other].trials, 20);
}

TEST(AbcGeneration, MonotoneBestAndConstantColony) {
  // Same size and density as DSJC125.1 (125 vertices, 736 edges).
  const Graph g = random_graph(125, 736.0 / 7750.0, 2024);
  TabuParams tabu;
  tabu.nbmax = 2000;
  AbcParams params;
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    Rng rng(seed);
    Population pop;
    for (int i = 0; i < params.colony_size; ++i) pop.push_back(random_coloring(g, 5, rng));
    AbcState state = make_abc_state(pop);
    SearchBudget budget;
    std::int64_t previous = state.best.conflicts();
    for (int gen = 0; gen < 100 && state.best.conflicts() > 0; ++gen) {
      abc_generation(state, tabu, params, rng, budget);
      ASSERT_EQ(state.sources.size(), static_cast<std::size_t>(params.colony_size));
      EXPECT_LE(state.best.conflicts(), previous);
      previous = state.best.conflicts();
      for (const auto& s : state.sources) EXPECT_GE(s.solution.conflicts(), state.best.conflicts());
    }
    EXPECT_TRUE(matches_recount(state.best));
  }
}

TEST(AbcGeneration, RestartHeavyModeTerminates) {
  const Graph g = complete_graph(6);
  TabuParams tabu;
  tabu.nbmax = 30;
  AbcParams params;
  params.colony_size = 6;
  params.onlooker_count = 3;
  params.abandonment_limit = 1;
  params.scout_count = 6;
  Rng rng(1);
  Population pop;
  for (int i = 0; i < 6; ++i) pop.push_back(random_coloring(g, 4, rng));
  AbcState state = make_abc_state(pop);
  SearchBudget budget;
  for (int gen = 0; gen < 20; ++gen) {
    // With a limit of 1 every failed source is stale; scouting must clear
    // all of them except the best one.
    ASSERT_TRUE(scout_phase(state.sources, params, rng, budget));
    std::size_t best = 0;
    for (std::size_t i = 1; i < state.sources.size(); ++i)
      if (state.sources[i].solution.conflicts() < state.sources[best].solution.conflicts()) best = i;
    for (std::size_t i = 0; i < state.sources.size(); ++i)
      if (i != best) EXPECT_EQ(state.sources[i].trials, 0);
    abc_generation(state, tabu, params, rng, budget);
  }
  EXPECT_EQ(state.generation, 20);
  // K6 with 4 colors: two color classes hold a pair each, so f >= 2.
  EXPECT_EQ(state.best.conflicts(), 2);
}

TEST(AbcGeneration, Dsjc125_1Monotone) {
  const auto path = find_instance("DSJC125.1");
  if (!path) GTEST_SKIP() << "DSJC125.1.col not present in " << instance_dir();
  const Graph g = load_dimacs(*path);
  AbcParams params;
  TabuParams tabu;
  tabu.nbmax = 2000;
  Rng rng(1);
  Population pop;
  for (int i = 0; i < params.colony_size; ++i) pop.push_back(random_coloring(g, 5, rng));
  AbcState state = make_abc_state(pop);
  SearchBudget budget;
  std::int64_t previous = state.best.conflicts();
  for (int gen = 0; gen < 100 && previous > 0; ++gen) {
    abc_generation(state, tabu, params, rng, budget);
    EXPECT_LE(state.best.conflicts(), previous);
    previous = state.best.conflicts();
  }
}
