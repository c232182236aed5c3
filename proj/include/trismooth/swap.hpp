#pragma once

#include <optional>

#include "trismooth/mesh.hpp"

namespace trismooth {

struct SwapReport {
  int passes = 0;
  int flips = 0;
  /// Set when the last scan performed no flips.
  bool locally_optimal = false;
};

/// The quadrilateral around an interior edge (u, v). `left` holds u -> v
/// counter-clockwise with apex p, `right` holds v -> u with apex q.
struct EdgeQuad {
  Index left = 0;
  Index right = 0;
  Index u = 0;
  Index v = 0;
  Index p = 0;
  Index q = 0;
};

/// Smallest interior angle of a triangle, in radians.
double min_angle(const Vertex& a, const Vertex& b, const Vertex& c);

/// Locates the two triangles on edge (u, v). Empty for boundary or missing
/// edges.
std::optional<EdgeQuad> edge_quad(const Mesh& mesh, Index u, Index v);

/// Decision for an already located quadrilateral.
bool should_swap(const Mesh& mesh, const EdgeQuad& quad);

/// True iff the quadrilateral formed by triangles t0 and t1 is strictly convex
/// and flipping its diagonal strictly raises the smallest of the six angles.
/// Throws MeshError unless the triangles share exactly one edge.
bool should_swap(const Mesh& mesh, Index t0, Index t1);

/// Replaces diagonal (u, v) by (p, q). Throws MeshError if the edge is not
/// interior or the flip is not an improvement.
void swap_edge(Mesh& mesh, Edge edge);

/// Scans all edges in ascending order, flipping every improvable one, until a
/// scan makes no flips or max_passes scans have run.
SwapReport swap_pass(Mesh& mesh, int max_passes = 50);

}  // namespace trismooth
