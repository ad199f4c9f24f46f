#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "islecolor/budget.hpp"
#include "islecolor/coloring.hpp"
#include "islecolor/rng.hpp"

namespace islecolor {

enum class NeighborhoodPolicy {
  AllCriticalMoves,  // every (critical vertex, other color) pair
  Sampled,           // `sample_count` uniformly drawn critical moves
};

struct TabuParams {
  int tenure = 7;
  std::int64_t nbmax = 100000;
  NeighborhoodPolicy policy = NeighborhoodPolicy::AllCriticalMoves;
  int sample_count = 0;

  void validate() const;
};

/// Tabu list realized as expiry stamps: (v, c) is tabu at iteration t iff
/// expiry(v, c) > t. Also carries the aspiration level (best f so far).
class TabuState {
 public:
  TabuState(int vertex_count, int k, std::int64_t best_conflicts);

  bool is_tabu(int v, int c) const { return expiry(v, c) > iteration_; }
  std::int64_t expiry(int v, int c) const {
    return expiry_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
  }
  void forbid(int v, int c, std::int64_t until) {
    expiry_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)] = until;
  }

  std::int64_t iteration() const { return iteration_; }
  void advance() { ++iteration_; }

  std::int64_t best_conflicts() const { return best_conflicts_; }
  void set_best_conflicts(std::int64_t f) { best_conflicts_ = f; }

 private:
  int k_;
  std::int64_t iteration_ = 0;
  std::int64_t best_conflicts_;
  std::vector<std::int64_t> expiry_;
};

/// Minimum-delta admissible move (non-tabu, or tabu but leading strictly
/// below the aspiration level), ties broken uniformly at random. If nothing
/// is admissible the least-bad tabu move is returned instead. Returns
/// nullopt only when the neighborhood is empty (no conflicts, or k = 1).
std::optional<Move> select_move(const Coloring& s, const TabuState& state,
                                const TabuParams& params, Rng& rng);

struct TabuOutcome {
  std::int64_t iterations = 0;
};

using MoveObserver = std::function<void(const Move&, std::int64_t iteration)>;

/// TabuCol local search. Runs until f = 0, `nbmax` iterations, or the
/// deadline, and returns the best coloring met (never worse than `start`).
/// After moving v away from color c, the pair (v, c) stays tabu for the
/// next `tenure` iterations.
Coloring tabucol(Coloring start, const TabuParams& params, Rng& rng,
                 const Deadline& deadline = {}, TabuOutcome* outcome = nullptr,
                 const MoveObserver& observer = {});

}  // namespace islecolor
