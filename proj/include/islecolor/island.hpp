#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "islecolor/abc.hpp"
#include "islecolor/budget.hpp"
#include "islecolor/coloring.hpp"
#include "islecolor/graph.hpp"
#include "islecolor/hho.hpp"
#include "islecolor/tabucol.hpp"
#include "islecolor/tlbo.hpp"

namespace islecolor {

enum class Metaheuristic { Hho, Abc, Tlbo };

std::string to_string(Metaheuristic m);

/// Violation of the island/master message contract.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EnsembleConfig {
  int island_count = 4;
  int generations = 1000;
  int population_size = 20;
  std::uint64_t base_seed = 1;
  TabuParams tabu;
  HhoParams hho;
  AbcParams abc;
  TlboParams tlbo;
  /// Wall-clock cap for a whole solve() call (all k values together).
  std::optional<std::chrono::duration<double>> time_limit;
  /// Cap on fitness evaluations per island per k.
  std::optional<std::uint64_t> fitness_eval_budget;
  /// Run only at this k instead of descending from the DSATUR bound.
  std::optional<int> target_k;
  /// Run islands one after another on the calling thread.
  bool sequential = false;
  /// Upper bound on worker threads in concurrent mode; 0 = one per island.
  int max_threads = 0;

  void validate() const;

  // Per-metaheuristic parameters with population size and generation count
  // taken from this config.
  HhoParams effective_hho() const;
  AbcParams effective_abc() const;
  TlboParams effective_tlbo() const;
};

struct IslandReport {
  int island_id = 0;
  Metaheuristic metaheuristic = Metaheuristic::Hho;
  Coloring best;
  std::uint64_t fitness_evaluations = 0;
  std::chrono::duration<double> wall_time{0};
  int generations_completed = 0;
};

struct KAttempt {
  int k = 0;
  bool success = false;
  std::vector<IslandReport> reports;
};

struct SolveResult {
  std::optional<int> smallest_legal_k;
  std::optional<Coloring> witness;
  std::vector<KAttempt> per_k_history;
  std::uint64_t total_fitness_evaluations = 0;
};

/// island_id mod 3: 0 -> HHO, 1 -> ABC, 2 -> TLBO.
Metaheuristic assign_metaheuristic(int island_id);

/// Stream seed for one island at one k, mixed from all three inputs.
std::uint64_t island_seed(std::uint64_t base_seed, int island_id, int k);

/// One worker: random population, the assigned metaheuristic for up to
/// `generations` generations, stopping early on f = 0, the evaluation cap
/// or the deadline. Resource expiry is a normal report.
IslandReport run_island(const Graph& g, int k, int island_id, const EnsembleConfig& config,
                        const Deadline& deadline = {});

/// All islands at one k, sequentially or on worker threads. Reports are
/// returned in island-id order either way.
std::vector<IslandReport> run_ensemble(const Graph& g, int k, const EnsembleConfig& config,
                                       const Deadline& deadline = {});

/// Report with the fewest conflicts; lowest island id on ties. Throws
/// ProtocolError on empty input.
const IslandReport& master_reduce(std::span<const IslandReport> reports);

/// Descends k from the DSATUR bound while the ensemble keeps finding proper
/// colorings, or, with target_k set, runs at that k only.
SolveResult solve(const Graph& g, const EnsembleConfig& config);

std::uint64_t total_evaluations(const SolveResult& result);

/// Machine-readable form. Wall times are omitted unless requested, so equal
/// runs serialize to identical bytes.
nlohmann::json to_json(const SolveResult& result, bool include_timing = false);

}  // namespace islecolor
