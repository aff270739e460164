#include "randmaps/cvs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "randmaps/errors.hpp"

namespace randmaps {

std::vector<int> corner_labels(const LabeledTree& lt, const CornerSequence& cs) {
  std::vector<int> l;
  l.reserve(cs.size());
  for (const Corner& c : cs.corners) l.push_back(lt.label[c.node]);
  return l;
}

std::vector<std::size_t> all_successors(const CornerSequence& corners,
                                        const std::vector<int>& labels) {
  const std::size_t n2 = corners.size();
  const int lmin = *std::min_element(labels.begin(), labels.end());
  const int lmax = *std::max_element(labels.begin(), labels.end());
  // scan the doubled list right to left; next[l] = least index seen with label l
  const std::size_t none = static_cast<std::size_t>(-2);
  std::vector<std::size_t> next(lmax - lmin + 2, none);
  std::vector<std::size_t> s(n2, kSuccessorInfinity);
  for (std::size_t k = 2 * n2; k-- > 0;) {
    const std::size_t i = k % n2;
    const int l = labels[i];
    if (k < n2) {
      if (l == lmin) {
        s[i] = kSuccessorInfinity;
      } else {
        const std::size_t j = next[l - 1 - lmin];
        if (j == none)
          throw ValidationError("successor: label l-1 never occurs (bad labels)");
        s[i] = j % n2;
      }
    }
    next[l - lmin] = k;
  }
  return s;
}

std::size_t successor(std::size_t i, const CornerSequence& corners,
                      const std::vector<int>& labels) {
  if (i >= corners.size()) throw ValidationError("successor: corner index out of range");
  return all_successors(corners, labels)[i];
}

namespace cvs_detail {

RootedMap tree_to_quad_with(const LabeledTree& lt, int orientation_bit,
                            const Conventions& conv) {
  if (lt.tree.n_edges() < 1)
    throw ValidationError("tree_to_quad requires a tree with >= 1 edge");
  if (orientation_bit != 0 && orientation_bit != 1)
    throw ValidationError("orientation_bit must be 0 or 1");
  const CornerSequence cs = corner_sequence(lt.tree);
  const std::vector<int> labels = corner_labels(lt, cs);
  const std::size_t n2 = cs.size();  // 2n corners, one arc each
  const auto succ = all_successors(cs, labels);

  const int n_tree = lt.tree.n_nodes();
  const int star = n_tree;  // the pointed vertex v-bullet
  std::vector<std::vector<std::size_t>> slots_of(n_tree);
  for (std::size_t j = 0; j < n2; ++j) slots_of[cs.corners[j].node].push_back(j);
  std::vector<std::vector<std::size_t>> incoming(n2);
  std::vector<std::size_t> to_star;
  for (std::size_t i = 0; i < n2; ++i) {
    if (succ[i] == kSuccessorInfinity)
      to_star.push_back(i);
    else
      incoming[succ[i]].push_back(i);
  }

  std::vector<std::vector<int>> rotations(n_tree + 1);
  std::vector<std::pair<std::size_t, int>> ends;  // (angular key, half-edge)
  for (int v = 0; v < n_tree; ++v) {
    auto& rot = rotations[v];
    for (std::size_t j : slots_of[v]) {
      ends.clear();
      // outgoing arc of corner j, keyed by the cyclic distance to its target;
      // the arc to v-bullet sits next to the leaving edge (v-bullet lies
      // outside the lens cut off by every incoming chord), hence key 0
      const std::size_t out_key =
          succ[j] == kSuccessorInfinity ? 0 : (succ[j] + n2 - j) % n2;
      ends.emplace_back(out_key, static_cast<int>(2 * j));
      for (std::size_t i : incoming[j])
        ends.emplace_back((i + n2 - j) % n2, static_cast<int>(2 * i + 1));
      if (conv.corner_sweep_descending)
        std::sort(ends.begin(), ends.end(), std::greater<>());
      else
        std::sort(ends.begin(), ends.end());
      for (auto& [key, h] : ends) rot.push_back(h);
    }
  }
  auto& star_rot = rotations[star];
  if (conv.star_decreasing)
    for (auto it = to_star.rbegin(); it != to_star.rend(); ++it)
      star_rot.push_back(static_cast<int>(2 * *it + 1));
  else
    for (std::size_t i : to_star) star_rot.push_back(static_cast<int>(2 * i + 1));

  const int root = orientation_bit == 0 ? 0 : 1;
  return RootedMap::build(std::move(rotations), root, star);
}

LabeledTree quad_to_tree_with(const RootedMap& q, const Conventions& conv) {
  if (q.pointed_vertex() < 0)
    throw ValidationError("quad_to_tree requires a pointed map");
  if (genus(q) != 0)
    throw ValidationError("quad_to_tree requires a plane map");
  if (!is_bipartite(q))
    throw ValidationError("quad_to_tree requires a bipartite map");
  const auto fs = faces(q);
  for (const Face& f : fs)
    if (f.degree() != 4)
      throw ValidationError("quad_to_tree requires all faces of degree 4");

  const auto lhat = bfs_distances(q, q.pointed_vertex());

  // one arc per face; ends are addressed as "insert before half-edge h"
  const int n_arcs = static_cast<int>(fs.size());
  std::vector<int> end_before(q.n_half_edges(), -1);  // arc-end id at corner(h)
  std::vector<std::pair<int, int>> arc_vertex(n_arcs);  // vertices of arc ends
  for (int a = 0; a < n_arcs; ++a) {
    const Face& f = fs[a];
    int labels[4];
    for (int i = 0; i < 4; ++i) labels[i] = lhat[q.vertex_of(f.half_edges[i])];
    const int d = *std::min_element(labels, labels + 4);
    int hi = -1, n_hi = 0;
    for (int i = 0; i < 4; ++i)
      if (labels[i] == d + 2) hi = i, ++n_hi;
    int ia, ib;  // face-corner indices of the arc ends
    if (n_hi == 1) {
      ia = hi;
      ib = conv.confluent_arc_to_next ? (hi + 1) % 4 : (hi + 3) % 4;
    } else if (n_hi == 0) {
      // simple pattern d, d+1, d, d+1: join the two d+1 corners
      ia = labels[0] == d + 1 ? 0 : 1;
      ib = ia + 2;
    } else {
      throw ValidationError("quad_to_tree: face label pattern is not d,d+1,d+2,d+1 or d,d+1,d,d+1");
    }
    for (int i : {ia, ib}) {
      if (labels[i] != d + 1 && i != hi)
        throw ValidationError("quad_to_tree: face label pattern mismatch");
      end_before[fs[a].half_edges[i]] = 2 * a + (i == ia ? 0 : 1);
    }
    arc_vertex[a] = {q.vertex_of(f.half_edges[ia]), q.vertex_of(f.half_edges[ib])};
  }

  // arc ends around each vertex, in combined rotation order; remember where
  // the root half-edge sits among them
  std::vector<std::vector<int>> arc_rot(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v)
    for (int h : q.rotation(v)) {
      if (end_before[h] != -1) arc_rot[v].push_back(end_before[h]);
    }

  // root vertex of the tree: the endpoint of the root edge farther from the
  // pointed vertex (the forward root arc leaves the root corner of the tree)
  const int hr = q.root();
  const int a0 = q.vertex_of(hr), b0 = q.vertex_of(RootedMap::twin(hr));
  const int rho = lhat[a0] > lhat[b0] ? a0 : b0;
  const int h0 = (rho == a0) ? hr : RootedMap::twin(hr);

  // position of h0 inside the arc-end cycle at rho: index of the first arc
  // end at or after h0 in rotation order
  int root_anchor = 0;
  {
    const auto& rot = q.rotation(rho);
    std::size_t pos = 0;
    while (rot[pos] != h0) ++pos;
    int count_before = 0;
    for (std::size_t i = 0; i < pos; ++i)
      if (end_before[rot[i]] != -1) ++count_before;
    // the arc end inserted before h0 itself (if any) still precedes h0
    if (end_before[h0] != -1) ++count_before;
    const int deg = static_cast<int>(arc_rot[rho].size());
    // forward reading starts at the first end after h0, backward at the last
    // end before it
    root_anchor = conv.read_rotation_forward
                      ? count_before % deg
                      : (count_before - 1 + deg) % deg;
  }

  // read the plane tree: children in rotation order (or reversed), starting
  // after the entry end (after the root anchor at rho)
  auto other_end = [&](int e) { return e ^ 1; };
  auto end_vertex = [&](int e) {
    return e % 2 == 0 ? arc_vertex[e / 2].first : arc_vertex[e / 2].second;
  };

  PlaneTree tree;
  std::vector<int> orig_of;  // preorder id -> quad vertex
  std::vector<char> visited(q.n_vertices(), 0);
  struct Frame {
    int quad_v;
    int pre_id;
    std::vector<int> pending;  // arc ends to descend through, in order
    std::size_t next = 0;
  };
  auto pending_from = [&](int v, int start_idx, bool skip_first) {
    const auto& ar = arc_rot[v];
    const int deg = static_cast<int>(ar.size());
    std::vector<int> out;
    for (int k = skip_first ? 1 : 0; k < deg; ++k) {
      int idx = conv.read_rotation_forward ? (start_idx + k) % deg
                                           : ((start_idx - k) % deg + deg) % deg;
      out.push_back(ar[idx]);
    }
    return out;
  };

  tree.children.emplace_back();
  orig_of.push_back(rho);
  visited[rho] = 1;
  std::vector<Frame> stack;
  stack.push_back({rho, 0, pending_from(rho, root_anchor, false), 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next >= f.pending.size()) {
      stack.pop_back();
      continue;
    }
    const int e = f.pending[f.next++];
    const int w = end_vertex(other_end(e));
    if (visited[w])
      throw ValidationError("quad_to_tree: face arcs contain a cycle");
    visited[w] = 1;
    const int id = static_cast<int>(tree.children.size());
    tree.children.emplace_back();
    tree.children[f.pre_id].push_back(id);
    orig_of.push_back(w);
    const auto& ar = arc_rot[w];
    int entry_idx = 0;
    while (ar[entry_idx] != other_end(e)) ++entry_idx;
    stack.push_back({w, id, pending_from(w, entry_idx, true), 0});
  }
  if (static_cast<int>(tree.children.size()) != q.n_vertices() - 1)
    throw ValidationError("quad_to_tree: face arcs do not span all vertices");

  LabeledTree lt{std::move(tree), {}};
  lt.label.reserve(orig_of.size());
  for (int v : orig_of) lt.label.push_back(lhat[v] - lhat[rho]);
  return lt;
}

}  // namespace cvs_detail

RootedMap tree_to_quad(const LabeledTree& lt, int orientation_bit) {
  return cvs_detail::tree_to_quad_with(lt, orientation_bit, cvs_detail::kFrozen);
}

LabeledTree quad_to_tree(const RootedMap& q) {
  return cvs_detail::quad_to_tree_with(q, cvs_detail::kFrozen);
}

TwoToOneReport verify_two_to_one(int n_edges) {
  if (n_edges < 1 || n_edges > 4)
    throw ResourceError("verify_two_to_one supports 1 <= n_edges <= 4");
  const auto lts = enumerate_labeled_trees(n_edges);
  TwoToOneReport rep;
  rep.n_edges = n_edges;
  rep.n_labeled_trees = static_cast<long long>(lts.size());

  std::map<std::vector<int>, std::pair<std::size_t, int>> seen_pointed;
  std::map<std::vector<int>, int> seen_rooted;
  auto witness = [&](const LabeledTree& lt, int bit, const std::string& what) {
    std::ostringstream os;
    os << "bijection violation (" << what << ") at orientation_bit=" << bit
       << " tree:\n" << write_labeled_tree(lt);
    return BijectionViolation(os.str());
  };

  for (std::size_t t = 0; t < lts.size(); ++t) {
    const LabeledTree& lt = lts[t];
    RootedMap q0 = tree_to_quad(lt, 0);
    for (int bit : {0, 1}) {
      const RootedMap q = bit == 0 ? q0 : tree_to_quad(lt, 1);
      auto code = canonical_code(q, true);
      auto [it, inserted] = seen_pointed.emplace(code, std::make_pair(t, bit));
      if (!inserted) throw witness(lt, bit, "duplicate pointed rooted image");
      ++seen_rooted[canonical_code(q, false)];
      LabeledTree back = quad_to_tree(q);
      if (!(back == lt)) throw witness(lt, bit, "round trip mismatch");
      if (bit == 1 &&
          canonical_code(q0.with_reversed_root(), true) != code)
        throw witness(lt, bit, "root reversal pairing broken");
    }
  }
  rep.n_pointed_rooted_quads = static_cast<long long>(seen_pointed.size());
  rep.n_rooted_quads = static_cast<long long>(seen_rooted.size());
  if (rep.n_pointed_rooted_quads != 2 * rep.n_labeled_trees)
    throw BijectionViolation("pointed rooted quadrangulation count is not 2x trees");
  if (rep.n_rooted_quads * (n_edges + 2) != 2 * rep.n_labeled_trees)
    throw BijectionViolation("rooted quadrangulation count fails the (n+2) depointing identity");
  rep.round_trip_ok = true;
  rep.reversal_pairing_ok = true;
  return rep;
}

}  // namespace randmaps
