#include "islecolor/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace islecolor {

Coloring::Coloring(const Graph& g, int k, std::vector<int> assignment)
    : graph_(&g), k_(k), assignment_(std::move(assignment)) {
  if (k < 1) {
    throw ParameterError("color budget k must be at least 1, got " + std::to_string(k));
  }
  const int n = g.vertex_count();
  if (static_cast<int>(assignment_.size()) != n) {
    throw ParameterError("assignment has " + std::to_string(assignment_.size()) +
                         " entries for a graph with " + std::to_string(n) + " vertices");
  }
  for (int v = 0; v < n; ++v) {
    const int c = assignment_[static_cast<std::size_t>(v)];
    if (c < 0 || c >= k) {
      throw ParameterError("vertex " + std::to_string(v) + " has color " + std::to_string(c) +
                           " outside [0, " + std::to_string(k) + ")");
    }
  }

  gamma_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
  for (int v = 0; v < n; ++v) {
    int* row = gamma_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(k);
    for (int u : g.neighbors(v)) ++row[assignment_[static_cast<std::size_t>(u)]];
  }
  critical_pos_.assign(static_cast<std::size_t>(n), -1);
  std::int64_t twice = 0;
  for (int v = 0; v < n; ++v) {
    const int own = gamma(v, color(v));
    twice += own;
    if (own > 0) set_critical(v, true);
  }
  conflicts_ = twice / 2;
}

std::vector<int> Coloring::conflicting_vertices() const {
  std::vector<int> out(critical_.begin(), critical_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Move Coloring::make_move(int v, int to_color) const {
  const int from = color(v);
  return Move{v, from, to_color, static_cast<std::int64_t>(gamma(v, to_color)) - gamma(v, from)};
}

void Coloring::apply(const Move& m) {
  if (m.vertex < 0 || m.vertex >= vertex_count()) {
    throw ConsistencyError("move vertex " + std::to_string(m.vertex) + " out of range");
  }
  if (m.to_color < 0 || m.to_color >= k_ || m.to_color == m.from_color) {
    throw ConsistencyError("move target color " + std::to_string(m.to_color) + " is invalid");
  }
  if (color(m.vertex) != m.from_color) {
    throw ConsistencyError("stale move: vertex " + std::to_string(m.vertex) + " has color " +
                           std::to_string(color(m.vertex)) + ", move expects " +
                           std::to_string(m.from_color));
  }
  const std::int64_t delta =
      static_cast<std::int64_t>(gamma(m.vertex, m.to_color)) - gamma(m.vertex, m.from_color);
  if (delta != m.delta) {
    throw ConsistencyError("stale move: delta " + std::to_string(m.delta) + " but table gives " +
                           std::to_string(delta));
  }
  recolor(m.vertex, m.to_color);
}

void Coloring::recolor(int v, int to_color) {
  const int from = color(v);
  if (from == to_color) return;
  conflicts_ += static_cast<std::int64_t>(gamma(v, to_color)) - gamma(v, from);
  assignment_[static_cast<std::size_t>(v)] = to_color;

  const auto k = static_cast<std::size_t>(k_);
  for (int u : graph_->neighbors(v)) {
    int* row = gamma_.data() + static_cast<std::size_t>(u) * k;
    --row[from];
    ++row[to_color];
    const int cu = assignment_[static_cast<std::size_t>(u)];
    if (cu == from && row[from] == 0) {
      set_critical(u, false);
    } else if (cu == to_color && row[to_color] == 1) {
      set_critical(u, true);
    }
  }
  set_critical(v, gamma(v, to_color) > 0);
}

void Coloring::set_critical(int v, bool critical) {
  int& pos = critical_pos_[static_cast<std::size_t>(v)];
  if (critical && pos < 0) {
    pos = static_cast<int>(critical_.size());
    critical_.push_back(v);
  } else if (!critical && pos >= 0) {
    const int last = critical_.back();
    critical_[static_cast<std::size_t>(pos)] = last;
    critical_pos_[static_cast<std::size_t>(last)] = pos;
    critical_.pop_back();
    pos = -1;
  }
}

int Coloring::distinct_colors() const {
  std::vector<char> used(static_cast<std::size_t>(k_), 0);
  for (int c : assignment_) used[static_cast<std::size_t>(c)] = 1;
  return static_cast<int>(std::count(used.begin(), used.end(), 1));
}

Coloring random_coloring(const Graph& g, int k, Rng& rng) {
  if (k < 1) {
    throw ParameterError("color budget k must be at least 1, got " + std::to_string(k));
  }
  std::vector<int> assignment(static_cast<std::size_t>(g.vertex_count()));
  for (int& c : assignment) c = uniform_int(rng, 0, k - 1);
  return Coloring(g, k, std::move(assignment));
}

std::int64_t count_conflicts(const Graph& g, std::span<const int> assignment) {
  return static_cast<std::int64_t>(monochromatic_edges(g, assignment).size());
}

std::vector<Edge> monochromatic_edges(const Graph& g, std::span<const int> assignment) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    if (assignment[static_cast<std::size_t>(u)] == assignment[static_cast<std::size_t>(v)]) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::string format_assignment(std::span<const int> assignment) {
  std::ostringstream out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i > 0) out << ' ';
    out << assignment[i];
  }
  return out.str();
}

}  // namespace islecolor
