#include "randmaps/tree.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>

#include "randmaps/errors.hpp"

namespace randmaps {

std::vector<int> PlaneTree::parents() const {
  std::vector<int> par(children.size(), -1);
  for (std::size_t v = 0; v < children.size(); ++v)
    for (int c : children[v]) par[c] = static_cast<int>(v);
  return par;
}

std::vector<int> PlaneTree::depths() const {
  std::vector<int> d(children.size(), 0);
  // preorder numbering: parents come before children
  for (std::size_t v = 0; v < children.size(); ++v)
    for (int c : children[v]) d[c] = d[v] + 1;
  return d;
}

OffspringDistribution OffspringDistribution::create(std::vector<double> pmf) {
  double sum = 0.0;
  for (double p : pmf) {
    if (p < 0.0) throw ValidationError("offspring pmf has a negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw ValidationError("offspring pmf does not sum to 1");
  if (pmf.empty() || pmf[0] <= 0.0)
    throw ValidationError("offspring pmf requires pmf(0) > 0");
  return OffspringDistribution{std::move(pmf)};
}

double OffspringDistribution::mean() const {
  double m = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) m += static_cast<double>(k) * pmf[k];
  return m;
}

PlaneTree tree_from_dyck(const std::vector<int>& steps) {
  PlaneTree t;
  t.children.emplace_back();
  std::vector<int> stack{0};
  for (int s : steps) {
    if (s == +1) {
      int id = t.n_nodes();
      t.children.emplace_back();
      t.children[stack.back()].push_back(id);
      stack.push_back(id);
    } else {
      stack.pop_back();
      if (stack.empty()) throw ValidationError("Dyck path goes negative");
    }
  }
  if (stack.size() != 1) throw ValidationError("Dyck path is not balanced");
  return t;
}

std::vector<int> dyck_from_tree(const PlaneTree& t) {
  std::vector<int> steps;
  steps.reserve(2 * t.n_edges());
  // preorder: recursion via explicit stack of (node, next child index)
  std::vector<std::pair<int, std::size_t>> stack{{t.root, 0}};
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < t.children[v].size()) {
      int c = t.children[v][i++];
      steps.push_back(+1);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) steps.push_back(-1);
    }
  }
  return steps;
}

namespace {

// all trees with e edges, recursively: first subtree of the root + the rest
void gen_trees(int e, std::vector<std::vector<PlaneTree>>& memo) {
  if (static_cast<int>(memo.size()) > e) return;
  gen_trees(e - 1, memo);
  std::vector<PlaneTree> out;
  for (int e1 = 0; e1 < e; ++e1) {
    for (const PlaneTree& first : memo[e1]) {
      for (const PlaneTree& rest : memo[e - 1 - e1]) {
        // root of `rest` absorbs `first` as its first child subtree
        PlaneTree t;
        int shift = first.n_nodes();  // nodes of `first` renumbered to 1..shift
        t.children.resize(1 + shift + rest.n_nodes() - 1);
        t.children[0].push_back(1);
        for (int v = 0; v < first.n_nodes(); ++v)
          for (int c : first.children[v]) t.children[v + 1].push_back(c + 1);
        auto remap = [&](int v) { return v == 0 ? 0 : v + shift; };
        for (int v = 0; v < rest.n_nodes(); ++v)
          for (int c : rest.children[v])
            t.children[remap(v)].push_back(remap(c));
        out.push_back(std::move(t));
      }
    }
  }
  memo.push_back(std::move(out));
}

std::vector<int> child_count_key(const PlaneTree& t) {
  std::vector<int> key(t.n_nodes());
  for (int v = 0; v < t.n_nodes(); ++v)
    key[v] = static_cast<int>(t.children[v].size());
  return key;
}

}  // namespace

std::vector<PlaneTree> enumerate_plane_trees(int n_edges) {
  if (n_edges < 0 || n_edges > 8)
    throw ResourceError("enumerate_plane_trees supports 0 <= n_edges <= 8");
  std::vector<std::vector<PlaneTree>> memo;
  memo.push_back({PlaneTree{{{}}, 0}});
  for (int e = 1; e <= n_edges; ++e) gen_trees(e, memo);
  std::vector<PlaneTree> out = memo[n_edges];
  std::sort(out.begin(), out.end(), [](const PlaneTree& a, const PlaneTree& b) {
    return child_count_key(a) < child_count_key(b);
  });
  return out;
}

std::vector<LabeledTree> enumerate_labeled_trees(int n_edges) {
  if (n_edges < 0 || n_edges > 5)
    throw ResourceError("enumerate_labeled_trees supports 0 <= n_edges <= 5");
  std::vector<LabeledTree> out;
  for (const PlaneTree& t : enumerate_plane_trees(n_edges)) {
    const auto par = t.parents();
    const int n = t.n_edges();
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
      LabeledTree lt{t, std::vector<int>(t.n_nodes(), 0)};
      long long c = code;
      // nodes 1..n in preorder each get one increment digit
      for (int v = 1; v <= n; ++v) {
        lt.label[v] = lt.label[par[v]] + static_cast<int>(c % 3) - 1;
        c /= 3;
      }
      out.push_back(std::move(lt));
    }
  }
  return out;
}

PlaneTree sample_uniform_tree(int n_edges, Rng& rng) {
  if (n_edges < 1) throw ValidationError("sample_uniform_tree requires n_edges >= 1");
  std::vector<int> steps(2 * n_edges + 1, -1);
  std::fill(steps.begin(), steps.begin() + n_edges, +1);
  std::shuffle(steps.begin(), steps.end(), rng);
  // cycle lemma: start just after the first position attaining the minimum
  int sum = 0, best = 1, best_at = -1;
  for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
    sum += steps[i];
    if (sum < best) best = sum, best_at = i;
  }
  std::vector<int> dyck;
  dyck.reserve(2 * n_edges);
  const int len = static_cast<int>(steps.size());
  for (int k = 1; k < len; ++k) dyck.push_back(steps[(best_at + k) % len]);
  return tree_from_dyck(dyck);
}

LabeledTree attach_uniform_labels(const PlaneTree& tree, Rng& rng) {
  std::uniform_int_distribution<int> inc(-1, 1);
  LabeledTree lt{tree, std::vector<int>(tree.n_nodes(), 0)};
  const auto par = tree.parents();
  for (int v = 0; v < tree.n_nodes(); ++v)
    if (v != tree.root) lt.label[v] = lt.label[par[v]] + inc(rng);
  return lt;
}

LabeledTree sample_uniform_labeled_tree(int n_edges, Rng& rng) {
  PlaneTree t = sample_uniform_tree(n_edges, rng);
  return attach_uniform_labels(t, rng);
}

namespace {

PlaneTree gw_once(std::discrete_distribution<int>& law, Rng& rng,
                  long long node_cap) {
  PlaneTree t;
  t.children.emplace_back();
  // draw child counts in preorder; the stack keeps the DFS frontier
  std::vector<std::pair<int, int>> todo{{0, law(rng)}};
  while (!todo.empty()) {
    auto& [v, remaining] = todo.back();
    if (remaining == 0) {
      todo.pop_back();
      continue;
    }
    --remaining;
    int id = t.n_nodes();
    if (id > node_cap) throw OverflowError("Galton-Watson tree exceeded node cap");
    t.children.emplace_back();
    t.children[v].push_back(id);
    todo.emplace_back(id, law(rng));
  }
  return t;
}

// Walker alias table: O(1) offspring draws in the rejection-heavy
// conditioned sampler, where std::discrete_distribution's binary search
// dominates the runtime.
class AliasTable {
 public:
  explicit AliasTable(const std::vector<double>& pmf)
      : prob_(pmf.size()), alias_(pmf.size()) {
    const int k = static_cast<int>(pmf.size());
    std::vector<double> scaled(k);
    for (int i = 0; i < k; ++i) scaled[i] = pmf[i] * k;
    std::vector<int> small, large;
    for (int i = 0; i < k; ++i)
      (scaled[i] < 1.0 ? small : large).push_back(i);
    while (!small.empty() && !large.empty()) {
      int s = small.back(), l = large.back();
      small.pop_back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] -= 1.0 - scaled[s];
      if (scaled[l] < 1.0) {
        large.pop_back();
        small.push_back(l);
      }
    }
    for (int i : large) prob_[i] = 1.0, alias_[i] = i;
    for (int i : small) prob_[i] = 1.0, alias_[i] = i;
  }

  int operator()(Rng& rng) const {
    // one 53-bit uniform per draw
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double x = u * static_cast<double>(prob_.size());
    int i = static_cast<int>(x);
    return (x - i) < prob_[i] ? i : alias_[i];
  }

 private:
  std::vector<double> prob_;
  std::vector<int> alias_;
};

// preorder child counts -> tree (inverse of reading counts off a DFS)
PlaneTree tree_from_preorder_counts(const std::vector<int>& counts) {
  const int n = static_cast<int>(counts.size());
  PlaneTree t;
  t.children.resize(n);
  std::vector<std::pair<int, int>> todo{{0, counts[0]}};
  int next = 1;
  while (!todo.empty()) {
    auto& [v, remaining] = todo.back();
    if (remaining == 0) {
      todo.pop_back();
      continue;
    }
    --remaining;
    t.children[v].push_back(next);
    todo.emplace_back(next, counts[next]);
    ++next;
  }
  return t;
}

// vertex counts reachable with positive probability, for n <= limit.
// ok[n]: some tree with n vertices has positive weight; cur[s] below tracks
// forests of exactly k subtrees holding s vertices in total.
std::vector<bool> feasible_sizes(const OffspringDistribution& off, int limit) {
  std::vector<bool> ok(limit + 1, false);
  ok[1] = true;  // pmf(0) > 0 by invariant
  for (int n = 1; n < limit; ++n) {
    std::vector<bool> cur(n + 1, false);
    cur[0] = true;
    for (std::size_t k = 1; k < off.pmf.size() && !ok[n + 1]; ++k) {
      std::vector<bool> nxt(n + 1, false);
      for (int s = 0; s <= n; ++s) {
        if (!cur[s]) continue;
        for (int m = 1; s + m <= n; ++m)
          if (ok[m]) nxt[s + m] = true;
      }
      cur = std::move(nxt);
      if (off.pmf[k] > 0.0 && cur[n]) ok[n + 1] = true;
      if (std::none_of(cur.begin(), cur.end(), [](bool b) { return b; })) break;
    }
  }
  return ok;
}

}  // namespace

PlaneTree sample_gw(const OffspringDistribution& offspring, Rng& rng,
                    long long node_cap) {
  if (offspring.mean() > 1.0 + 1e-9)
    throw ValidationError("supercritical offspring distribution");
  std::discrete_distribution<int> law(offspring.pmf.begin(), offspring.pmf.end());
  return gw_once(law, rng, node_cap);
}

PlaneTree sample_gw_conditioned(const OffspringDistribution& offspring,
                                int n_vertices, Rng& rng,
                                long long max_attempts) {
  if (n_vertices < 1) throw ValidationError("n_vertices must be >= 1");
  if (offspring.mean() > 1.0 + 1e-9)
    throw ValidationError("supercritical offspring distribution");
  constexpr int kFeasibilityCap = 256;
  if (n_vertices <= kFeasibilityCap) {
    auto ok = feasible_sizes(offspring, n_vertices);
    if (!ok[n_vertices])
      throw RetryLimitError(
          "no tree with the requested vertex count is reachable; rejection "
          "would exhaust max_attempts",
          max_attempts);
  }
  // Rejection on the Lukasiewicz walk: a preorder child-count sequence
  // xi_0..xi_{T-1} codes a tree of T vertices iff T is the first index where
  // 1 + sum(xi_j - 1) hits 0. Only counts are simulated; the tree is built
  // once, on acceptance.
  AliasTable law(offspring.pmf);
  std::vector<int> counts(n_vertices);
  for (long long attempt = 1; attempt <= max_attempts; ++attempt) {
    long long walk = 1;
    int created = 0;
    while (created < n_vertices) {
      int xi = law(rng);
      counts[created++] = xi;
      walk += xi - 1;
      if (walk == 0) break;
    }
    if (walk == 0 && created == n_vertices)
      return tree_from_preorder_counts(counts);
    // walk > 0 after n_vertices draws means the tree is strictly larger;
    // either way, reject
  }
  throw RetryLimitError("conditioned Galton-Watson sampler exhausted attempts",
                        max_attempts);
}

HeavyTailOffspring heavy_tail_offspring(double alpha, int k_max) {
  if (!(alpha > 1.0 && alpha < 2.0))
    throw ValidationError("alpha must lie in (1,2)");
  if (k_max < 2) throw ValidationError("k_max must be >= 2");
  double tail_mass = 0.0, tail_mean = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    double w = std::pow(static_cast<double>(k), -1.0 - alpha);
    tail_mass += w;
    tail_mean += k * w;
  }
  const double c = 1.0 / tail_mean;  // forces mean exactly 1
  const double p0 = 1.0 - c * tail_mass;
  if (p0 <= 0.0)
    throw ValidationError("criticality infeasible: tail mass too large");
  std::vector<double> pmf(k_max + 1);
  pmf[0] = p0;
  for (int k = 1; k <= k_max; ++k)
    pmf[k] = c * std::pow(static_cast<double>(k), -1.0 - alpha);
  // renormalize the float dust so create() sees sum 1 within 1e-12
  double s = std::accumulate(pmf.begin(), pmf.end(), 0.0);
  pmf[0] += 1.0 - s;
  return HeavyTailOffspring{OffspringDistribution::create(std::move(pmf)), c};
}

CornerSequence corner_sequence(const PlaneTree& tree) {
  if (tree.n_edges() < 1)
    throw ValidationError("corner_sequence: a 0-edge tree has no corners");
  CornerSequence cs;
  cs.corners.reserve(2 * tree.n_edges());
  std::vector<std::pair<int, std::size_t>> stack{{tree.root, 0}};
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < tree.children[v].size()) {
      cs.corners.push_back({v, static_cast<int>(i)});
      int c = tree.children[v][i++];
      stack.emplace_back(c, 0);
    } else {
      if (v != tree.root)
        cs.corners.push_back({v, static_cast<int>(tree.children[v].size())});
      stack.pop_back();
    }
  }
  return cs;
}

std::vector<int> contour_vertices(const PlaneTree& tree) {
  CornerSequence cs = corner_sequence(tree);
  std::vector<int> t;
  t.reserve(cs.size() + 1);
  for (const Corner& c : cs.corners) t.push_back(c.node);
  t.push_back(tree.root);
  return t;
}

std::vector<int> contour_function(const PlaneTree& tree) {
  const auto depth = tree.depths();
  std::vector<int> C;
  for (int v : contour_vertices(tree)) C.push_back(depth[v]);
  return C;
}

std::vector<int> label_function(const LabeledTree& lt) {
  std::vector<int> L;
  for (int v : contour_vertices(lt.tree)) L.push_back(lt.label[v]);
  return L;
}

std::string write_tree(const PlaneTree& t) {
  std::string out;
  for (int s : dyck_from_tree(t)) out.push_back(s == +1 ? '(' : ')');
  out.push_back('\n');
  return out;
}

std::string write_labeled_tree(const LabeledTree& lt) {
  std::string out = write_tree(lt.tree);
  std::ostringstream ls;
  for (int v = 0; v < lt.tree.n_nodes(); ++v) {
    if (v) ls << ' ';
    ls << lt.label[v];
  }
  out += ls.str();
  out.push_back('\n');
  return out;
}

PlaneTree read_tree(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("tree input: missing shape line");
  std::vector<int> steps;
  for (char ch : line) {
    if (ch == '(') steps.push_back(+1);
    else if (ch == ')') steps.push_back(-1);
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      throw ValidationError("tree input: unexpected character in shape line");
  }
  return tree_from_dyck(steps);
}

LabeledTree read_labeled_tree(std::istream& in) {
  PlaneTree t = read_tree(in);
  LabeledTree lt{std::move(t), {}};
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("tree input: missing label line");
  std::istringstream ls(line);
  int x;
  while (ls >> x) lt.label.push_back(x);
  if (static_cast<int>(lt.label.size()) != lt.tree.n_nodes())
    throw ValidationError("tree input: label count does not match node count");
  if (!lt.label.empty() && lt.label[0] != 0)
    throw ValidationError("tree input: root label must be 0");
  const auto par = lt.tree.parents();
  for (int v = 1; v < lt.tree.n_nodes(); ++v)
    if (std::abs(lt.label[v] - lt.label[par[v]]) > 1)
      throw ValidationError("tree input: label increment outside {-1,0,1}");
  return lt;
}

}  // namespace randmaps
