#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trismooth {

using Index = std::int32_t;

struct Vertex {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Vertex indices of one element. Counter-clockwise once stored in a Mesh.
struct Triangle {
  Index a = 0;
  Index b = 0;
  Index c = 0;

  Index operator[](int k) const { return k == 0 ? a : (k == 1 ? b : c); }
  std::array<Index, 3> as_array() const { return {a, b, c}; }
  bool contains(Index v) const { return a == v || b == v || c == v; }

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Undirected edge with `lo < hi`.
struct Edge {
  Index lo = 0;
  Index hi = 0;

  static Edge of(Index u, Index v) { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for topologically or numerically invalid meshes.
class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One entry of the closed triangle ring around an interior vertex: the
/// triangle and its edge opposite the vertex, in counter-clockwise order.
struct FanEntry {
  Index triangle = 0;
  Index q = 0;
  Index r = 0;
};

/// Signed area of (p, q, r); positive when counter-clockwise.
double signed_area(const Vertex& p, const Vertex& q, const Vertex& r);

/// Indexed planar triangle mesh.
///
/// Triangles are stored counter-clockwise. Per-vertex incidence lists and
/// boundary flags are derived from connectivity and are only recomputed when
/// the topology changes (edge flips); moving vertices never touches them.
class Mesh {
 public:
  Mesh() = default;

  /// Validates indices and manifoldness, reorients clockwise triangles and
  /// derives incidence and boundary flags. Zero-area triangles are kept.
  static Mesh build(std::vector<Vertex> vertices, std::span<const std::array<Index, 3>> triangles);
  static Mesh build(std::vector<Vertex> vertices, std::span<const Triangle> triangles);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Vertex& vertex(Index v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const Triangle& triangle(Index t) const { return triangles_[static_cast<std::size_t>(t)]; }

  /// Triangles sharing vertex v; its length is the element count e_v.
  const std::vector<Index>& incident(Index v) const { return incidence_[static_cast<std::size_t>(v)]; }
  bool is_boundary(Index v) const { return boundary_[static_cast<std::size_t>(v)] != 0; }
  const std::vector<std::uint8_t>& boundary_flags() const { return boundary_; }

  /// Replaces all coordinates. Connectivity is left alone.
  void set_positions(std::vector<Vertex> positions);

  double signed_area(Index t) const;

  /// Sorted list of unique edges.
  std::vector<Edge> edges() const;

  /// Triangles containing edge (u, v): zero, one or two entries.
  std::vector<Index> triangles_on_edge(Index u, Index v) const;

  /// Sorted distinct vertices sharing a triangle with v.
  std::vector<Index> neighbors(Index v) const;

  /// Counter-clockwise ring around interior vertex v, consecutive entries
  /// sharing a vertex (entry i's r is entry i+1's q). Throws MeshError for
  /// boundary vertices and non-manifold neighbourhoods.
  std::vector<FanEntry> interior_fan(Index v) const;

  /// Replaces triangle t's connectivity and refreshes the incidence lists
  /// and boundary flags for the vertices involved. Used by edge flips.
  void replace_triangles(Index t0, Triangle n0, Index t1, Triangle n1);

  /// Indices of triangles whose signed area is not positive.
  std::vector<Index> degenerate_triangles() const;

  /// Length of the bounding box diagonal.
  double bbox_diagonal() const;

 private:
  void rebuild_boundary();

  std::vector<Vertex> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<Index>> incidence_;
  std::vector<std::uint8_t> boundary_;
};

/// Triangle t rotated so that v comes first, orientation preserved.
Triangle rotate_to_front(const Triangle& t, Index v);

}  // namespace trismooth
