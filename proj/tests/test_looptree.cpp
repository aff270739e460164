#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "randmaps/looptree.hpp"
#include "randmaps/rng.hpp"
#include "randmaps/tree.hpp"
#include "test_util.hpp"

using namespace randmaps;

namespace {

int internal_count(const PlaneTree& t) {
  int c = 0;
  for (const auto& ch : t.children) c += !ch.empty();
  return c;
}

std::multiset<std::pair<int, int>> edge_multiset(const LoopGraph& g) {
  std::multiset<std::pair<int, int>> out;
  for (auto [u, v] : g.edges) out.insert(std::minmax(u, v));
  return out;
}

bool connected(const LoopGraph& g) {
  auto d = loop_distances(g, 0);
  return std::none_of(d.begin(), d.end(),
                      [](int x) { return x >= test_util::kInf || x < 0; });
}

}  // namespace

TEST_SUITE_BEGIN("looptree");

TEST_CASE("build_looptree: the three forced shapes") {
  PlaneTree lone;
  lone.children = {{}};
  LoopGraph g0 = build_looptree(lone);
  CHECK(g0.n_vertices == 1);
  CHECK(g0.edges.empty());

  PlaneTree star3;
  star3.children = {{1, 2, 3}, {}, {}, {}};
  LoopGraph g1 = build_looptree(star3);
  CHECK(g1.n_vertices == 4);
  CHECK(edge_multiset(g1) == std::multiset<std::pair<int, int>>{
                                 {0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(loop_diameter(g1) == 2);  // 4-cycle

  PlaneTree path2;
  path2.children = {{1}, {2}, {}};
  LoopGraph g2 = build_looptree(path2);
  CHECK(g2.n_vertices == 3);
  CHECK(g2.edges.size() == 4);  // two 2-cycles sharing the middle vertex
  CHECK(edge_multiset(g2) == std::multiset<std::pair<int, int>>{
                                 {0, 1}, {0, 1}, {1, 2}, {1, 2}});
  CHECK(loop_distances(g2, 0)[2] == 2);
}

TEST_CASE("looptree invariants on all trees with <= 8 vertices") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& t : enumerate_plane_trees(n)) {
      LoopGraph g = build_looptree(t);
      CHECK(g.n_vertices == t.n_nodes());
      CHECK(static_cast<int>(g.edges.size()) ==
            t.n_edges() + internal_count(t));
      CHECK(connected(g));
      // loop decomposition: sum of (k_v + 1) over internal vertices
      int loop_sum = 0;
      for (const auto& ch : t.children)
        if (!ch.empty()) loop_sum += static_cast<int>(ch.size()) + 1;
      CHECK(loop_sum == static_cast<int>(g.edges.size()));
    }
}

TEST_CASE("looptree invariants on random larger trees") {
  Rng rng = derive_stream(31);
  for (int rep = 0; rep < 50; ++rep) {
    PlaneTree t = sample_uniform_tree(200, rng);
    LoopGraph g = build_looptree(t);
    CHECK(g.n_vertices == t.n_nodes());
    CHECK(static_cast<int>(g.edges.size()) == t.n_edges() + internal_count(t));
    CHECK(connected(g));
  }
}

TEST_CASE("loop metric matches the all-pairs oracle") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_plane_trees(n)) {
      LoopGraph g = build_looptree(t);
      auto oracle = test_util::floyd_warshall(g.n_vertices, g.edges);
      int true_diam = 0;
      for (int u = 0; u < g.n_vertices; ++u) {
        auto d = loop_distances(g, u);
        for (int v = 0; v < g.n_vertices; ++v) {
          CHECK(d[v] == oracle[u][v]);
          true_diam = std::max(true_diam, oracle[u][v]);
        }
      }
      CHECK(loop_diameter(g) == true_diam);
    }
}

TEST_CASE("loop_diameter exact on a mid-size random tree") {
  Rng rng = derive_stream(37);
  for (int rep = 0; rep < 5; ++rep) {
    PlaneTree t = sample_uniform_tree(300, rng);
    LoopGraph g = build_looptree(t);
    int diam = 0;
    for (int u = 0; u < g.n_vertices; ++u) {
      auto d = loop_distances(g, u);
      diam = std::max(diam, *std::max_element(d.begin(), d.end()));
    }
    CHECK(loop_diameter(g) == diam);
  }
}

TEST_CASE("stable_scaling_samples: shape, rescaling, determinism") {
  auto rows = stable_scaling_samples(1.5, {30, 60}, 5, 17, 100);
  REQUIRE(rows.size() == 10);
  for (const auto& r : rows) {
    CHECK((r.n == 30 || r.n == 60));
    CHECK(r.diameter >= 1);
    CHECK(r.rescaled ==
          doctest::Approx(r.diameter * std::pow(double(r.n), -2.0 / 3.0)));
  }
  auto again = stable_scaling_samples(1.5, {30, 60}, 5, 17, 100);
  for (std::size_t i = 0; i < rows.size(); ++i)
    CHECK(rows[i].diameter == again[i].diameter);
}

TEST_CASE("edge list export") {
  PlaneTree path2;
  path2.children = {{1}, {2}, {}};
  LoopGraph g = build_looptree(path2);
  std::istringstream in(g.write_edge_list());
  int u, v, lines = 0;
  while (in >> u >> v) {
    ++lines;
    CHECK(u >= 0);
    CHECK(v < g.n_vertices);
  }
  CHECK(lines == static_cast<int>(g.edges.size()));
}

TEST_SUITE_END();
