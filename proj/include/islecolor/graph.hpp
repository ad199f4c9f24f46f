#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace islecolor {

/// Thrown when a graph cannot be built from the given vertex/edge data.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph with 0-based vertex ids.
///
/// Neighbors are stored in compressed sparse rows (sorted per vertex) for
/// iteration; a bit matrix answers adjacency queries in O(1) for graphs up
/// to kDenseLimit vertices, larger graphs fall back to binary search.
class Graph {
 public:
  static constexpr int kDenseLimit = 16384;

  Graph() = default;

  /// Builds a graph on `vertex_count` vertices. Duplicate edges and both
  /// orientations of the same edge collapse to one. Throws GraphError on a
  /// self-loop, an endpoint outside [0, vertex_count) or vertex_count < 1.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return vertex_count_; }
  std::int64_t edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const {
    const auto begin = offsets_[static_cast<std::size_t>(v)];
    const auto end = offsets_[static_cast<std::size_t>(v) + 1];
    return {targets_.data() + begin, static_cast<std::size_t>(end - begin)};
  }
  int degree(int v) const {
    return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] -
                            offsets_[static_cast<std::size_t>(v)]);
  }
  int max_degree() const { return max_degree_; }

  bool adjacent(int u, int v) const;

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.offsets_ == b.offsets_ &&
           a.targets_ == b.targets_;
  }

 private:
  int vertex_count_ = 0;
  std::int64_t edge_count_ = 0;
  int max_degree_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<int> targets_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> matrix_;
};

/// Edge density |E| / (|V|(|V|-1)/2). Throws GraphError when |V| < 2.
double density(const Graph& g);

}  // namespace islecolor
