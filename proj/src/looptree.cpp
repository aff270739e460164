#include "randmaps/looptree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "randmaps/errors.hpp"

namespace randmaps {

std::vector<std::vector<int>> LoopGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n_vertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::string LoopGraph::write_edge_list() const {
  std::ostringstream out;
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

LoopGraph build_looptree(const PlaneTree& tau) {
  if (tau.n_nodes() < 1) throw ValidationError("build_looptree: empty tree");
  LoopGraph g;
  g.n_vertices = tau.n_nodes();
  for (int v = 0; v < tau.n_nodes(); ++v) {
    const auto& ch = tau.children[v];
    if (ch.empty()) continue;
    // loop of length k+1: v - first child - ... - last child - v
    g.edges.emplace_back(v, ch.front());
    for (std::size_t i = 0; i + 1 < ch.size(); ++i)
      g.edges.emplace_back(ch[i], ch[i + 1]);
    g.edges.emplace_back(ch.back(), v);
  }
  return g;
}

namespace {

std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

}  // namespace

std::vector<int> loop_distances(const LoopGraph& g, int source) {
  if (source < 0 || source >= g.n_vertices)
    throw ValidationError("loop_distances: source out of range");
  return bfs(g.adjacency(), source);
}

int loop_diameter(const LoopGraph& g) {
  const auto adj = g.adjacency();
  if (g.n_vertices == 1) return 0;

  auto ecc = [&](int v, int* far = nullptr) {
    auto d = bfs(adj, v);
    int best = 0, arg = v;
    for (int i = 0; i < g.n_vertices; ++i)
      if (d[i] > best) best = d[i], arg = i;
    if (far) *far = arg;
    return best;
  };

  // double sweep: lower bound plus the far pair (a, b)
  int a = 0, b = 0;
  ecc(0, &a);
  int lb = ecc(a, &b);
  if (g.n_vertices > 20000) return lb;  // lower bound only at large sizes

  // exact refinement (iFUB): BFS from the middle of the a-b path, then close
  // the gap by checking eccentricities level by level from the top
  std::vector<int> da = bfs(adj, a);
  // midpoint: walk back from b along parents implicitly via distances
  int mid = b;
  for (int steps = da[b] / 2; steps > 0; --steps)
    for (int w : adj[mid])
      if (da[w] == da[mid] - 1) {
        mid = w;
        break;
      }
  auto dm = bfs(adj, mid);
  int top = *std::max_element(dm.begin(), dm.end());
  std::vector<std::vector<int>> by_level(top + 1);
  for (int v = 0; v < g.n_vertices; ++v) by_level[dm[v]].push_back(v);
  for (int i = top; 2 * i > lb; --i)
    for (int v : by_level[i]) lb = std::max(lb, ecc(v));
  return lb;
}

std::vector<ScalingSample> stable_scaling_samples(
    double alpha, const std::vector<int>& n_list, int replicas,
    std::uint64_t seed, int k_max, long long max_attempts) {
  auto heavy = heavy_tail_offspring(alpha, k_max);
  std::vector<ScalingSample> out;
  out.reserve(n_list.size() * static_cast<std::size_t>(replicas));
  for (std::size_t si = 0; si < n_list.size(); ++si) {
    const int n = n_list[si];
    const double scale = std::pow(static_cast<double>(n), -1.0 / alpha);
    for (int r = 0; r < replicas; ++r) {
      Rng rng = derive_stream(seed, si, static_cast<std::uint64_t>(r));
      PlaneTree tau = sample_gw_conditioned(heavy.dist, n, rng, max_attempts);
      int diam = loop_diameter(build_looptree(tau));
      out.push_back({n, r, diam, scale * diam});
    }
  }
  return out;
}

}  // namespace randmaps
