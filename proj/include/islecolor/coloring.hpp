#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "islecolor/graph.hpp"
#include "islecolor/rng.hpp"

namespace islecolor {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A move was applied to a coloring it was not computed against.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One-vertex recolor. `delta` is the change in conflict count.
struct Move {
  int vertex = -1;
  int from_color = -1;
  int to_color = -1;
  std::int64_t delta = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Complete k-bounded color assignment with incremental conflict accounting.
///
/// Besides the assignment it keeps the gamma table, gamma(v, c) = number of
/// neighbors of v holding color c, the number of monochromatic edges, and the
/// set of critical vertices (those touching at least one monochromatic edge).
/// Every mutation keeps all three consistent with the assignment.
///
/// The graph is referenced, not owned, and must outlive the coloring.
class Coloring {
 public:
  /// Throws ParameterError if k < 1, the assignment length differs from the
  /// vertex count, or a color lies outside [0, k).
  Coloring(const Graph& g, int k, std::vector<int> assignment);

  const Graph& graph() const { return *graph_; }
  int k() const { return k_; }
  int vertex_count() const { return static_cast<int>(assignment_.size()); }

  int color(int v) const { return assignment_[static_cast<std::size_t>(v)]; }
  std::span<const int> assignment() const { return assignment_; }

  /// f(s): number of monochromatic edges.
  std::int64_t conflicts() const { return conflicts_; }
  bool is_proper() const { return conflicts_ == 0; }

  int gamma(int v, int c) const {
    return gamma_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
  }
  std::span<const int> gamma_row(int v) const {
    return {gamma_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(k_),
            static_cast<std::size_t>(k_)};
  }

  /// Critical vertices in internal (unspecified) order; O(1) access.
  std::span<const int> critical_vertices() const { return critical_; }
  /// Critical vertices in ascending order.
  std::vector<int> conflicting_vertices() const;

  Move make_move(int v, int to_color) const;

  /// Throws ConsistencyError if the move's from_color or delta is stale.
  void apply(const Move& m);

  /// Sets v to `to_color` (no-op if already there).
  void recolor(int v, int to_color);

  int distinct_colors() const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.k_ == b.k_ && a.assignment_ == b.assignment_;
  }

 private:
  void set_critical(int v, bool critical);

  const Graph* graph_;
  int k_;
  std::vector<int> assignment_;
  std::vector<int> gamma_;
  std::int64_t conflicts_ = 0;
  std::vector<int> critical_;
  std::vector<int> critical_pos_;  // -1 when not critical
};

/// Each vertex gets a color drawn uniformly from [0, k).
Coloring random_coloring(const Graph& g, int k, Rng& rng);

/// From-scratch count of monochromatic edges; independent of Coloring.
std::int64_t count_conflicts(const Graph& g, std::span<const int> assignment);

/// Monochromatic edges as 0-based (u, v), u < v.
std::vector<Edge> monochromatic_edges(const Graph& g, std::span<const int> assignment);

/// Space-separated colors in vertex order, no trailing newline.
std::string format_assignment(std::span<const int> assignment);

}  // namespace islecolor
