#include "islecolor/tabucol.hpp"

#include <limits>

namespace islecolor {

void TabuParams::validate() const {
  if (tenure < 1) throw ParameterError("tabu tenure must be >= 1");
  if (nbmax < 1) throw ParameterError("tabu depth (nbmax) must be >= 1");
  if (policy == NeighborhoodPolicy::Sampled && sample_count < 1) {
    throw ParameterError("sampled neighborhood needs sample_count >= 1");
  }
}

TabuState::TabuState(int vertex_count, int k, std::int64_t best_conflicts)
    : k_(k),
      best_conflicts_(best_conflicts),
      expiry_(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(k), 0) {}

namespace {

// Tracks the minimum-delta move among those offered, with reservoir
// tie-breaking so every tied move is equally likely.
class MinTracker {
 public:
  void offer(int v, int c, std::int64_t delta, Rng& rng) {
    if (delta < best_) {
      best_ = delta;
      ties_ = 1;
      v_ = v;
      c_ = c;
    } else if (delta == best_) {
      ++ties_;
      if (uniform_int(rng, 0, ties_ - 1) == 0) {
        v_ = v;
        c_ = c;
      }
    }
  }
  bool empty() const { return ties_ == 0; }
  std::int64_t delta() const { return best_; }
  int vertex() const { return v_; }
  int color() const { return c_; }

 private:
  std::int64_t best_ = std::numeric_limits<std::int64_t>::max();
  int ties_ = 0;
  int v_ = -1;
  int c_ = -1;
};

}  // namespace

std::optional<Move> select_move(const Coloring& s, const TabuState& state,
                                const TabuParams& params, Rng& rng) {
  const int k = s.k();
  const auto critical = s.critical_vertices();
  if (critical.empty() || k < 2) return std::nullopt;

  const std::int64_t f = s.conflicts();
  const std::int64_t aspiration = state.best_conflicts();
  MinTracker admissible;
  MinTracker tabu_fallback;

  auto consider = [&](int v, int c, std::int64_t delta) {
    if (!state.is_tabu(v, c) || f + delta < aspiration) {
      admissible.offer(v, c, delta, rng);
    } else {
      tabu_fallback.offer(v, c, delta, rng);
    }
  };

  if (params.policy == NeighborhoodPolicy::AllCriticalMoves) {
    for (int v : critical) {
      const auto row = s.gamma_row(v);
      const int current = s.color(v);
      const int base = row[static_cast<std::size_t>(current)];
      for (int c = 0; c < k; ++c) {
        if (c == current) continue;
        const std::int64_t delta = row[static_cast<std::size_t>(c)] - base;
        // A move worse than the current admissible best can only matter
        // as a fallback, which is needed only while nothing is admissible.
        if (!admissible.empty() && delta > admissible.delta()) continue;
        consider(v, c, delta);
      }
    }
  } else {
    const int last = static_cast<int>(critical.size()) - 1;
    for (int i = 0; i < params.sample_count; ++i) {
      const int v = critical[static_cast<std::size_t>(uniform_int(rng, 0, last))];
      const int current = s.color(v);
      int c = uniform_int(rng, 0, k - 2);
      if (c >= current) ++c;
      consider(v, c, static_cast<std::int64_t>(s.gamma(v, c)) - s.gamma(v, current));
    }
  }

  const MinTracker& chosen = admissible.empty() ? tabu_fallback : admissible;
  return Move{chosen.vertex(), s.color(chosen.vertex()), chosen.color(), chosen.delta()};
}

Coloring tabucol(Coloring start, const TabuParams& params, Rng& rng, const Deadline& deadline,
                 TabuOutcome* outcome, const MoveObserver& observer) {
  params.validate();
  Coloring s = std::move(start);
  TabuState state(s.vertex_count(), s.k(), s.conflicts());

  // Snapshot of the most recent best-level solution, taken only when the
  // search is about to leave that level.
  std::vector<int> best_snapshot;
  std::int64_t iterations = 0;

  while (s.conflicts() > 0 && iterations < params.nbmax) {
    if ((iterations & 255) == 0 && deadline.passed()) break;
    const auto move = select_move(s, state, params, rng);
    if (!move) break;

    const std::int64_t best = state.best_conflicts();
    if (s.conflicts() == best && s.conflicts() + move->delta > best) {
      best_snapshot.assign(s.assignment().begin(), s.assignment().end());
    }
    s.apply(*move);
    state.forbid(move->vertex, move->from_color, state.iteration() + params.tenure + 1);
    if (observer) observer(*move, state.iteration());
    if (s.conflicts() < best) state.set_best_conflicts(s.conflicts());
    state.advance();
    ++iterations;
  }

  if (outcome != nullptr) outcome->iterations = iterations;
  if (s.conflicts() > state.best_conflicts()) {
    return Coloring(s.graph(), s.k(), std::move(best_snapshot));
  }
  return s;
}

}  // namespace islecolor
