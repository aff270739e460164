#include "randmaps/map.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <sstream>

#include "randmaps/errors.hpp"

namespace randmaps {

RootedMap RootedMap::build(std::vector<std::vector<int>> rotations, int root,
                           int pointed_vertex) {
  RootedMap m;
  std::size_t n_half = 0;
  for (const auto& r : rotations) n_half += r.size();
  if (n_half == 0 || n_half % 2 != 0)
    throw ValidationError("map: half-edge count must be positive and even");
  m.vertex_of_.assign(n_half, -1);
  m.rotation_next_.assign(n_half, -1);
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    const auto& r = rotations[v];
    for (std::size_t i = 0; i < r.size(); ++i) {
      int h = r[i];
      if (h < 0 || h >= static_cast<int>(n_half))
        throw ValidationError("map: half-edge id out of range");
      if (m.vertex_of_[h] != -1)
        throw ValidationError("map: half-edge appears in two rotations");
      m.vertex_of_[h] = static_cast<int>(v);
      m.rotation_next_[h] = r[(i + 1) % r.size()];
    }
  }
  for (std::size_t h = 0; h < n_half; ++h)
    if (m.vertex_of_[h] == -1)
      throw ValidationError("map: half-edge missing from all rotations");
  if (root < 0 || root >= static_cast<int>(n_half))
    throw ValidationError("map: root half-edge out of range");
  if (pointed_vertex >= static_cast<int>(rotations.size()))
    throw ValidationError("map: pointed vertex out of range");
  m.rotations_ = std::move(rotations);
  m.root_ = root;
  m.pointed_ = pointed_vertex;

  // connectivity over vertices
  std::vector<char> seen(m.n_vertices(), 0);
  std::deque<int> q{m.root_vertex()};
  seen[m.root_vertex()] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int h : m.rotations_[v]) {
      int w = m.vertex_of_[h ^ 1];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push_back(w);
      }
    }
  }
  if (reached != m.n_vertices())
    throw ValidationError("map: underlying graph is disconnected");

  genus(m);  // throws on a corrupted rotation system
  return m;
}

RootedMap RootedMap::with_reversed_root() const {
  RootedMap m = *this;
  m.root_ = root_ ^ 1;
  return m;
}

RootedMap RootedMap::with_pointed_vertex(int v) const {
  if (v >= n_vertices()) throw ValidationError("map: pointed vertex out of range");
  RootedMap m = *this;
  m.pointed_ = v;
  return m;
}

std::vector<Face> faces(const RootedMap& m) {
  std::vector<Face> out;
  std::vector<char> seen(m.n_half_edges(), 0);
  for (int h0 = 0; h0 < m.n_half_edges(); ++h0) {
    if (seen[h0]) continue;
    Face f;
    int h = h0;
    do {
      seen[h] = 1;
      f.half_edges.push_back(h);
      h = m.face_next(h);
    } while (h != h0);
    out.push_back(std::move(f));
  }
  return out;
}

bool is_bipartite(const RootedMap& m) {
  std::vector<int> color(m.n_vertices(), -1);
  std::deque<int> q{0};
  color[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int h : m.rotation(v)) {
      int w = m.vertex_of(h ^ 1);
      if (color[w] == -1) {
        color[w] = color[v] ^ 1;
        q.push_back(w);
      } else if (color[w] == color[v]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<int> bfs_distances(const RootedMap& m, int source) {
  if (source < 0 || source >= m.n_vertices())
    throw ValidationError("bfs_distances: source out of range");
  std::vector<int> dist(m.n_vertices(), -1);
  std::deque<int> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int h : m.rotation(v)) {
      int w = m.vertex_of(h ^ 1);
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

DistanceProfile distance_profile(const RootedMap& m, ProfileKind kind) {
  const auto dist = bfs_distances(m, m.root_vertex());
  DistanceProfile p{kind, {}};
  if (kind == ProfileKind::Vertex) {
    p.values = dist;
  } else {
    p.values.reserve(m.n_edges());
    for (int e = 0; e < m.n_edges(); ++e) {
      int a = m.vertex_of(2 * e), b = m.vertex_of(2 * e + 1);
      p.values.push_back(std::min(dist[a], dist[b]));
    }
  }
  return p;
}

std::uint64_t count_geodesics(const RootedMap& m, int u, int v) {
  const auto dist = bfs_distances(m, u);
  // vertices in increasing distance order; counts propagate down BFS levels
  std::vector<int> order(m.n_vertices());
  for (int i = 0; i < m.n_vertices(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return dist[a] < dist[b]; });
  constexpr std::uint64_t kCap = std::uint64_t{1} << 63;
  std::vector<std::uint64_t> cnt(m.n_vertices(), 0);
  cnt[u] = 1;
  for (int a : order) {
    if (cnt[a] == 0) continue;
    for (int h : m.rotation(a)) {
      int b = m.vertex_of(h ^ 1);
      if (dist[b] == dist[a] + 1) {
        if (cnt[b] > kCap - cnt[a])
          throw OverflowError("geodesic count exceeds 2^63");
        cnt[b] += cnt[a];
      }
    }
  }
  return cnt[v];
}

int genus(const RootedMap& m) {
  const int V = m.n_vertices();
  const int E = m.n_edges();
  const int F = static_cast<int>(faces(m).size());
  const int chi = V - E + F;  // = 2 - 2g
  if (chi % 2 != 0 || chi > 2)
    throw ValidationError("map: Euler relation violated (corrupted map)");
  return (2 - chi) / 2;
}

std::vector<int> canonical_code(const RootedMap& m, bool with_point) {
  // BFS over half-edges from the root using the two structure permutations;
  // the discovery order is canonical for rooted maps.
  const int n = m.n_half_edges();
  std::vector<int> canon(n, -1);
  std::vector<int> order;
  order.reserve(n);
  std::deque<int> q{m.root()};
  canon[m.root()] = 0;
  order.push_back(m.root());
  while (!q.empty()) {
    int h = q.front();
    q.pop_front();
    for (int nh : {m.rotation_next(h), h ^ 1}) {
      if (canon[nh] == -1) {
        canon[nh] = static_cast<int>(order.size());
        order.push_back(nh);
        q.push_back(nh);
      }
    }
  }
  std::vector<int> code;
  code.reserve(2 * n + 1);
  for (int h : order) {
    code.push_back(canon[m.rotation_next(h)]);
    code.push_back(canon[h ^ 1]);
  }
  if (with_point) {
    int mark = -1;
    if (m.pointed_vertex() >= 0) {
      mark = n;
      for (int h = 0; h < n; ++h)
        if (m.vertex_of(h) == m.pointed_vertex()) mark = std::min(mark, canon[h]);
    }
    code.push_back(mark);
  }
  return code;
}

std::string write_map(const RootedMap& m) {
  std::ostringstream out;
  out << m.n_vertices() << ' ' << m.n_edges() << ' ' << m.root();
  if (m.pointed_vertex() >= 0) out << ' ' << m.pointed_vertex();
  out << '\n';
  for (int v = 0; v < m.n_vertices(); ++v) {
    out << v << ':';
    for (int h : m.rotation(v)) out << ' ' << h;
    out << '\n';
  }
  return out.str();
}

RootedMap read_map(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("map input: missing header");
  std::istringstream hs(line);
  int V, E, root, pointed = -1;
  if (!(hs >> V >> E >> root)) throw ValidationError("map input: bad header");
  if (!(hs >> pointed)) pointed = -1;  // extraction failure writes 0
  if (V <= 0 || E <= 0) throw ValidationError("map input: bad sizes");
  std::vector<std::vector<int>> rotations(V);
  for (int i = 0; i < V; ++i) {
    if (!std::getline(in, line))
      throw ValidationError("map input: missing vertex line");
    std::istringstream vs(line);
    int v;
    char colon;
    if (!(vs >> v >> colon) || colon != ':' || v < 0 || v >= V)
      throw ValidationError("map input: bad vertex line");
    int h;
    while (vs >> h) rotations[v].push_back(h);
  }
  RootedMap m = RootedMap::build(std::move(rotations), root, pointed);
  if (m.n_edges() != E) throw ValidationError("map input: edge count mismatch");
  return m;
}

}  // namespace randmaps
