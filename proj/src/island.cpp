#include "islecolor/island.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "islecolor/dsatur.hpp"

namespace islecolor {

std::string to_string(Metaheuristic m) {
  switch (m) {
    case Metaheuristic::Hho:
      return "HHO";
    case Metaheuristic::Abc:
      return "ABC";
    case Metaheuristic::Tlbo:
      return "TLBO";
  }
  return "?";
}

void EnsembleConfig::validate() const {
  if (island_count < 1) throw ParameterError("island_count must be >= 1");
  if (generations < 1) throw ParameterError("generations must be >= 1");
  if (population_size < 2) throw ParameterError("population_size must be >= 2");
  if (target_k && *target_k < 1) throw ParameterError("target k must be >= 1");
  if (time_limit && time_limit->count() <= 0.0) throw ParameterError("time limit must be positive");
  if (max_threads < 0) throw ParameterError("max_threads must be >= 0");
  tabu.validate();
  effective_hho().validate();
  effective_abc().validate();
  effective_tlbo().validate();
}

HhoParams EnsembleConfig::effective_hho() const {
  HhoParams p = hho;
  p.population_size = population_size;
  p.generations = generations;
  return p;
}

AbcParams EnsembleConfig::effective_abc() const {
  AbcParams p = abc;
  p.colony_size = population_size;
  return p;
}

TlboParams EnsembleConfig::effective_tlbo() const {
  TlboParams p = tlbo;
  p.population_size = population_size;
  p.generations = generations;
  return p;
}

Metaheuristic assign_metaheuristic(int island_id) {
  switch (island_id % 3) {
    case 0:
      return Metaheuristic::Hho;
    case 1:
      return Metaheuristic::Abc;
    default:
      return Metaheuristic::Tlbo;
  }
}

std::uint64_t island_seed(std::uint64_t base_seed, int island_id, int k) {
  std::uint64_t h = splitmix64(base_seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(island_id)));
  return splitmix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k)) << 32));
}

IslandReport run_island(const Graph& g, int k, int island_id, const EnsembleConfig& config,
                        const Deadline& deadline) {
  const auto started = Clock::now();
  const Metaheuristic kind = assign_metaheuristic(island_id);
  Rng rng(island_seed(config.base_seed, island_id, k));
  SearchBudget budget(config.fitness_eval_budget, deadline, /*stop_on_solution=*/true);

  Population pop = random_population(g, k, config.population_size, rng, budget);
  auto finish = [&](Coloring best, int generations) {
    return IslandReport{island_id,
                        kind,
                        std::move(best),
                        budget.evaluations(),
                        std::chrono::duration<double>(Clock::now() - started),
                        generations};
  };
  if (pop.empty()) return finish(random_coloring(g, k, rng), 0);
  if (pop.size() < 2) return finish(std::move(pop.front()), 0);

  switch (kind) {
    case Metaheuristic::Hho: {
      const HhoParams params = config.effective_hho();
      HhoState state = make_hho_state(std::move(pop));
      while (state.t < config.generations && !budget.exhausted()) {
        hho_generation(state, params, config.tabu, rng, budget);
      }
      return finish(std::move(state.rabbit), state.t);
    }
    case Metaheuristic::Abc: {
      const AbcParams params = config.effective_abc();
      AbcState state = make_abc_state(std::move(pop));
      while (state.generation < config.generations && !budget.exhausted()) {
        abc_generation(state, config.tabu, params, rng, budget);
      }
      return finish(std::move(state.best), state.generation);
    }
    case Metaheuristic::Tlbo: {
      ClassState state = make_class_state(std::move(pop));
      while (state.generation < config.generations && !budget.exhausted()) {
        tlbo_generation(state, config.tabu, rng, budget);
      }
      const int generations = state.generation;
      return finish(std::move(state.learners[state.teacher]), generations);
    }
  }
  throw ProtocolError("unknown metaheuristic");
}

std::vector<IslandReport> run_ensemble(const Graph& g, int k, const EnsembleConfig& config,
                                       const Deadline& deadline) {
  const int islands = config.island_count;
  std::vector<std::optional<IslandReport>> slots(static_cast<std::size_t>(islands));

  if (config.sequential || islands == 1) {
    for (int id = 0; id < islands; ++id) {
      slots[static_cast<std::size_t>(id)] = run_island(g, k, id, config, deadline);
    }
  } else {
    const int workers = config.max_threads > 0 ? std::min(config.max_threads, islands) : islands;
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(islands));
    {
      std::vector<std::jthread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (int id = next++; id < islands; id = next++) {
            try {
              slots[static_cast<std::size_t>(id)] = run_island(g, k, id, config, deadline);
            } catch (...) {
              errors[static_cast<std::size_t>(id)] = std::current_exception();
            }
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<IslandReport> reports;
  reports.reserve(slots.size());
  for (auto& slot : slots) reports.push_back(std::move(*slot));
  return reports;
}

const IslandReport& master_reduce(std::span<const IslandReport> reports) {
  if (reports.empty()) throw ProtocolError("master received no island reports");
  const IslandReport* best = &reports.front();
  for (const auto& r : reports.subspan(1)) {
    const auto f = r.best.conflicts();
    if (f < best->best.conflicts() || (f == best->best.conflicts() && r.island_id < best->island_id)) {
      best = &r;
    }
  }
  return *best;
}

namespace {

bool verified_proper(const Graph& g, const Coloring& c) {
  return c.is_proper() && count_conflicts(g, c.assignment()) == 0;
}

}  // namespace

SolveResult solve(const Graph& g, const EnsembleConfig& config) {
  config.validate();
  const Deadline deadline =
      config.time_limit
          ? Deadline::after(std::chrono::duration_cast<Clock::duration>(*config.time_limit))
          : Deadline{};
  SolveResult result;

  auto attempt = [&](int k) {
    KAttempt a{k, false, run_ensemble(g, k, config, deadline)};
    const IslandReport& winner = master_reduce(a.reports);
    a.success = verified_proper(g, winner.best);
    std::optional<Coloring> found;
    if (a.success) found = winner.best;
    for (const auto& r : a.reports) result.total_fitness_evaluations += r.fitness_evaluations;
    result.per_k_history.push_back(std::move(a));
    return found;
  };

  if (config.target_k) {
    if (auto found = attempt(*config.target_k)) {
      result.smallest_legal_k = *config.target_k;
      result.witness = std::move(found);
    }
    return result;
  }

  const int k0 = greedy_upper_bound(g);
  result.smallest_legal_k = k0;
  result.witness = Coloring(g, k0, dsatur_coloring(g));
  for (int k = k0; k >= 1; --k) {
    if (deadline.passed()) break;
    auto found = attempt(k);
    if (!found) break;
    result.smallest_legal_k = k;
    result.witness = std::move(found);
  }
  return result;
}

std::uint64_t total_evaluations(const SolveResult& result) {
  std::uint64_t total = 0;
  for (const auto& a : result.per_k_history) {
    for (const auto& r : a.reports) total += r.fitness_evaluations;
  }
  return total;
}

nlohmann::json to_json(const SolveResult& result, bool include_timing) {
  using nlohmann::json;
  json doc;
  doc["smallest_legal_k"] = result.smallest_legal_k ? json(*result.smallest_legal_k) : json(nullptr);
  if (result.witness) {
    const auto colors = result.witness->assignment();
    doc["witness"] = {{"k", result.witness->k()},
                      {"colors", std::vector<int>(colors.begin(), colors.end())}};
  } else {
    doc["witness"] = nullptr;
  }
  json history = json::array();
  for (const auto& a : result.per_k_history) {
    json reports = json::array();
    for (const auto& r : a.reports) {
      const auto colors = r.best.assignment();
      json entry = {{"island", r.island_id},
                    {"metaheuristic", to_string(r.metaheuristic)},
                    {"conflicts", r.best.conflicts()},
                    {"fitness_evaluations", r.fitness_evaluations},
                    {"generations_completed", r.generations_completed},
                    {"colors", std::vector<int>(colors.begin(), colors.end())}};
      if (include_timing) entry["wall_time_sec"] = r.wall_time.count();
      reports.push_back(std::move(entry));
    }
    history.push_back({{"k", a.k}, {"success", a.success}, {"reports", std::move(reports)}});
  }
  doc["per_k_history"] = std::move(history);
  doc["total_fitness_evaluations"] = result.total_fitness_evaluations;
  return doc;
}

}  // namespace islecolor
