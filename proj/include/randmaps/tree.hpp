#ifndef RANDMAPS_TREE_HPP
#define RANDMAPS_TREE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "randmaps/rng.hpp"

namespace randmaps {

// Rooted plane tree. Nodes are numbered in preorder (root = 0, children in
// stored order), which makes two trees equal iff their children vectors are.
struct PlaneTree {
  std::vector<std::vector<int>> children;
  int root = 0;

  int n_nodes() const { return static_cast<int>(children.size()); }
  int n_edges() const { return n_nodes() - 1; }

  std::vector<int> parents() const;
  std::vector<int> depths() const;

  bool operator==(const PlaneTree&) const = default;
};

struct LabeledTree {
  PlaneTree tree;
  std::vector<int> label;  // per node, label[root] == 0

  bool operator==(const LabeledTree&) const = default;
};

// Corner c_i is the angular sector from which the i-th contour step leaves.
// position counts corners of the node in contour order: a non-root node with
// k children has corners 0..k, the root has corners 0..k-1.
struct Corner {
  int node;
  int position;
  bool operator==(const Corner&) const = default;
};

struct CornerSequence {
  std::vector<Corner> corners;  // length 2 * n_edges
  std::size_t size() const { return corners.size(); }
};

struct OffspringDistribution {
  std::vector<double> pmf;  // pmf[k] = P(k children)

  // Validates nonnegativity, sum 1 within 1e-12, pmf[0] > 0.
  static OffspringDistribution create(std::vector<double> pmf);
  double mean() const;
};

// --- construction / enumeration -------------------------------------------

PlaneTree tree_from_dyck(const std::vector<int>& steps);  // +1/-1, length 2n
std::vector<int> dyck_from_tree(const PlaneTree& t);

// Every plane tree with n_edges edges, each exactly once, sorted by the
// DFS child-count sequence. n_edges <= 8.
std::vector<PlaneTree> enumerate_plane_trees(int n_edges);

// All well-labeled trees with n_edges edges (3^n per shape). n_edges <= 5.
std::vector<LabeledTree> enumerate_labeled_trees(int n_edges);

// --- sampling ---------------------------------------------------------------

// Exactly uniform over plane trees with n_edges >= 1 edges: a shuffled
// (+1 x n, -1 x n+1) sequence has a unique rotation that is a Lukasiewicz
// excursion (cycle lemma); dropping its last step yields a uniform Dyck path.
PlaneTree sample_uniform_tree(int n_edges, Rng& rng);

// Root label 0, edge increments i.i.d. uniform on {-1,0,1}.
LabeledTree attach_uniform_labels(const PlaneTree& tree, Rng& rng);

LabeledTree sample_uniform_labeled_tree(int n_edges, Rng& rng);

// Unconditioned Galton-Watson family tree (critical/subcritical offspring).
// Throws OverflowError once more than node_cap nodes have been created.
PlaneTree sample_gw(const OffspringDistribution& offspring, Rng& rng,
                    long long node_cap);

// Exact conditional law via rejection on |V| == n_vertices.
PlaneTree sample_gw_conditioned(const OffspringDistribution& offspring,
                                int n_vertices, Rng& rng,
                                long long max_attempts = 1000000);

// Critical power-law offspring: pmf(k) = c * k^{-1-alpha} for 1 <= k <= k_max,
// pmf(0) set so that the mean is exactly 1. Returns the realized constant c.
struct HeavyTailOffspring {
  OffspringDistribution dist;
  double c;
};
HeavyTailOffspring heavy_tail_offspring(double alpha, int k_max);

// --- encodings --------------------------------------------------------------

CornerSequence corner_sequence(const PlaneTree& tree);  // throws on 0 edges

// t(0..2n): vertices read along the contour (t(0) = t(2n) = root).
std::vector<int> contour_vertices(const PlaneTree& tree);

std::vector<int> contour_function(const PlaneTree& tree);    // C(0..2n)
std::vector<int> label_function(const LabeledTree& lt);      // L(0..2n)

// --- serialization ----------------------------------------------------------

// Line 1: balanced parentheses (preorder, "()" = one edge).
// Line 2 (labeled only): whitespace-separated labels, root first, DFS order.
std::string write_tree(const PlaneTree& t);
std::string write_labeled_tree(const LabeledTree& lt);
PlaneTree read_tree(std::istream& in);
LabeledTree read_labeled_tree(std::istream& in);

}  // namespace randmaps

#endif
