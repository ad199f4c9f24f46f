#include "islecolor/graph.hpp"

#include <algorithm>
#include <string>

namespace islecolor {

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 1) {
    throw GraphError("graph needs at least one vertex, got " + std::to_string(vertex_count));
  }
  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw GraphError("self-loop on vertex " + std::to_string(u));
    }
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

  Graph g;
  g.vertex_count_ = vertex_count;
  g.edge_count_ = static_cast<std::int64_t>(canonical.size());

  std::vector<std::int64_t> degree(static_cast<std::size_t>(vertex_count), 0);
  for (auto [u, v] : canonical) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  g.offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (int v = 0; v < vertex_count; ++v) {
    g.offsets_[static_cast<std::size_t>(v) + 1] =
        g.offsets_[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
  }
  g.targets_.resize(static_cast<std::size_t>(g.offsets_.back()));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Canonical edges are sorted, so each row fills in ascending order.
  for (auto [u, v] : canonical) {
    g.targets_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
  }
  for (auto [u, v] : canonical) {
    g.targets_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    auto row = g.targets_.begin() + g.offsets_[static_cast<std::size_t>(v)];
    std::sort(row, row + degree[static_cast<std::size_t>(v)]);
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(degree[static_cast<std::size_t>(v)]));
  }

  if (vertex_count <= kDenseLimit) {
    g.words_per_row_ = (static_cast<std::size_t>(vertex_count) + 63) / 64;
    g.matrix_.assign(g.words_per_row_ * static_cast<std::size_t>(vertex_count), 0);
    for (auto [u, v] : canonical) {
      g.matrix_[static_cast<std::size_t>(u) * g.words_per_row_ + static_cast<std::size_t>(v) / 64] |=
          std::uint64_t{1} << (v % 64);
      g.matrix_[static_cast<std::size_t>(v) * g.words_per_row_ + static_cast<std::size_t>(u) / 64] |=
          std::uint64_t{1} << (u % 64);
    }
  }
  return g;
}

bool Graph::adjacent(int u, int v) const {
  if (!matrix_.empty()) {
    return (matrix_[static_cast<std::size_t>(u) * words_per_row_ + static_cast<std::size_t>(v) / 64] >>
            (v % 64)) & 1U;
  }
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

double density(const Graph& g) {
  const auto n = static_cast<double>(g.vertex_count());
  if (g.vertex_count() < 2) {
    throw GraphError("density is undefined for fewer than two vertices");
  }
  return static_cast<double>(g.edge_count()) / (n * (n - 1.0) / 2.0);
}

}  // namespace islecolor
