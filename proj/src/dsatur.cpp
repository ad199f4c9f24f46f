#include "islecolor/dsatur.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <tuple>

namespace islecolor {

std::vector<int> dsatur_coloring(const Graph& g) {
  const int n = g.vertex_count();
  const std::size_t palette = static_cast<std::size_t>(g.max_degree()) + 1;
  const std::size_t words = (palette + 63) / 64;

  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(n) * words, 0);
  std::vector<int> saturation(static_cast<std::size_t>(n), 0);

  // Ordered so that begin() is the next vertex to color.
  using Key = std::tuple<int, int, int>;  // (-saturation, -degree, id)
  std::set<Key> queue;
  for (int v = 0; v < n; ++v) queue.emplace(0, -g.degree(v), v);

  while (!queue.empty()) {
    const int v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());

    const std::uint64_t* row = seen.data() + static_cast<std::size_t>(v) * words;
    int c = 0;
    for (std::size_t w = 0; w < words; ++w) {
      if (~row[w] != 0) {
        c = static_cast<int>(w * 64) + std::countr_zero(~row[w]);
        break;
      }
    }
    color[static_cast<std::size_t>(v)] = c;

    for (int u : g.neighbors(v)) {
      if (color[static_cast<std::size_t>(u)] >= 0) continue;
      std::uint64_t& word = seen[static_cast<std::size_t>(u) * words + static_cast<std::size_t>(c) / 64];
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      if ((word & bit) != 0) continue;
      queue.erase(Key{-saturation[static_cast<std::size_t>(u)], -g.degree(u), u});
      word |= bit;
      ++saturation[static_cast<std::size_t>(u)];
      queue.emplace(-saturation[static_cast<std::size_t>(u)], -g.degree(u), u);
    }
  }
  return color;
}

int greedy_upper_bound(const Graph& g) {
  const auto color = dsatur_coloring(g);
  return *std::max_element(color.begin(), color.end()) + 1;
}

}  // namespace islecolor
