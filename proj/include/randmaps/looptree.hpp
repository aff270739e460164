#ifndef RANDMAPS_LOOPTREE_HPP
#define RANDMAPS_LOOPTREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "randmaps/rng.hpp"
#include "randmaps/tree.hpp"

namespace randmaps {

// Multigraph on the vertex set of the source tree: each vertex with k >= 1
// children contributes a loop of length k+1 through its children and itself.
// An only child is joined to its parent by two parallel edges.
struct LoopGraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // multiset of unordered pairs

  std::vector<std::vector<int>> adjacency() const;
  std::string write_edge_list() const;  // one "u v" line per edge
};

LoopGraph build_looptree(const PlaneTree& tau);

std::vector<int> loop_distances(const LoopGraph& g, int source);

// Exact when n_vertices <= 2e4 (double sweep + eccentricity refinement);
// beyond that, the double-sweep lower bound.
int loop_diameter(const LoopGraph& g);

struct ScalingSample {
  int n;        // conditioned tree size (vertices)
  int replica;
  int diameter;
  double rescaled;  // n^{-1/alpha} * diameter
};

// For each n in n_list, `replicas` Galton-Watson trees conditioned on n
// vertices with critical k^{-1-alpha} offspring; looptree diameters rescaled
// by n^{-1/alpha}. Replica streams derive from (seed, size index, replica).
std::vector<ScalingSample> stable_scaling_samples(
    double alpha, const std::vector<int>& n_list, int replicas,
    std::uint64_t seed, int k_max = 10000,
    long long max_attempts = 100000000LL);

}  // namespace randmaps

#endif
