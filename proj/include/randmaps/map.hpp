#ifndef RANDMAPS_MAP_HPP
#define RANDMAPS_MAP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace randmaps {

// Rooted map as a rotation system. Half-edges 0..2E-1 pair as (2k, 2k+1),
// so twin(h) == h ^ 1. Immutable after build; all queries are read-only.
class RootedMap {
 public:
  // rotations[v] lists the half-edges around vertex v in rotation order.
  // Validates the involution, the rotation cycles, connectivity, and that
  // Euler's relation yields an integer genus >= 0.
  static RootedMap build(std::vector<std::vector<int>> rotations, int root,
                         int pointed_vertex = -1);

  int n_vertices() const { return static_cast<int>(rotations_.size()); }
  int n_edges() const { return static_cast<int>(vertex_of_.size()) / 2; }
  int n_half_edges() const { return static_cast<int>(vertex_of_.size()); }
  int root() const { return root_; }
  int pointed_vertex() const { return pointed_; }
  int root_vertex() const { return vertex_of_[root_]; }

  static int twin(int h) { return h ^ 1; }
  int vertex_of(int h) const { return vertex_of_[h]; }
  int rotation_next(int h) const { return rotation_next_[h]; }
  // next half-edge along the face containing h
  int face_next(int h) const { return rotation_next_[h ^ 1]; }
  const std::vector<int>& rotation(int v) const { return rotations_[v]; }

  RootedMap with_reversed_root() const;
  RootedMap with_pointed_vertex(int v) const;

 private:
  RootedMap() = default;
  std::vector<std::vector<int>> rotations_;
  std::vector<int> vertex_of_;
  std::vector<int> rotation_next_;
  int root_ = 0;
  int pointed_ = -1;
};

struct Face {
  std::vector<int> half_edges;  // in face-tracing order
  int degree() const { return static_cast<int>(half_edges.size()); }
};

enum class ProfileKind { Edge, Vertex };

struct DistanceProfile {
  ProfileKind kind;
  std::vector<int> values;  // one per edge or per vertex
};

std::vector<Face> faces(const RootedMap& m);
bool is_bipartite(const RootedMap& m);
std::vector<int> bfs_distances(const RootedMap& m, int source);

// Edge kind: d(e) = min over the two endpoints of the distance to the root
// vertex. Vertex kind: distances of all vertices to the root vertex.
DistanceProfile distance_profile(const RootedMap& m, ProfileKind kind);

// Number of distinct shortest u -> v paths (parallel edges count separately).
// Throws OverflowError beyond 2^63.
std::uint64_t count_geodesics(const RootedMap& m, int u, int v);

int genus(const RootedMap& m);

// Canonical relabeling from the root half-edge; two rooted (pointed) maps are
// isomorphic iff their codes are equal. Set with_point = false to forget the
// distinguished vertex.
std::vector<int> canonical_code(const RootedMap& m, bool with_point = true);

// Text format: line 1 "V E root [pointed]"; then per vertex "v: h1 h2 ... hk"
// in rotation order. Round-trips bit-exactly.
std::string write_map(const RootedMap& m);
RootedMap read_map(std::istream& in);

}  // namespace randmaps

#endif
