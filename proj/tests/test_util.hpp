// Shared oracle helpers for the test suites: independent brute-force
// implementations kept deliberately naive.
#ifndef RANDMAPS_TEST_UTIL_HPP
#define RANDMAPS_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "randmaps/map.hpp"

namespace test_util {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

// all-pairs shortest paths, O(V^3)
inline std::vector<std::vector<int>> floyd_warshall(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : edges)
    if (u != v) d[u][v] = d[v][u] = 1;  // self-loops never shorten paths
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<std::pair<int, int>> map_edges(const randmaps::RootedMap& m) {
  std::vector<std::pair<int, int>> edges;
  for (int h = 0; h < m.n_half_edges(); h += 2)
    edges.emplace_back(m.vertex_of(h), m.vertex_of(h ^ 1));
  return edges;
}

// number of distinct shortest u->v walks, counting parallel edges separately,
// by exhaustive DFS over half-edge steps bounded by the shortest distance
inline std::uint64_t count_paths_brute(const randmaps::RootedMap& m, int u,
                                       int v) {
  auto dist = test_util::floyd_warshall(m.n_vertices(), map_edges(m));
  const int target = dist[u][v];
  std::uint64_t count = 0;
  // DFS over (vertex, steps used)
  struct Frame {
    int vertex;
    int steps;
  };
  std::vector<Frame> stack{{u, 0}};
  while (!stack.empty()) {
    auto [w, s] = stack.back();
    stack.pop_back();
    if (s == target) {
      if (w == v) ++count;
      continue;
    }
    for (int h = 0; h < m.n_half_edges(); ++h)
      if (m.vertex_of(h) == w && dist[m.vertex_of(h ^ 1)][v] == target - s - 1)
        stack.push_back({m.vertex_of(h ^ 1), s + 1});
  }
  return count;
}

// two-sample KS statistic straight from the definition
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace test_util

#endif
