#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "trismooth/generators.hpp"
#include "trismooth/mesh.hpp"

namespace trismooth::testing {

/// Unit square split into four triangles by its centre (vertex 4).
inline Mesh square_with_center(Vertex center = {0.5, 0.5}) {
  std::vector<Vertex> v{{0, 0}, {1, 0}, {1, 1}, {0, 1}, center};
  std::vector<Triangle> t{{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
  return Mesh::build(std::move(v), t);
}

/// Regular hexagon of circumradius `radius` around the origin with a free
/// centre node (vertex 0) at `center`.
inline Mesh hexagon_fan(Vertex center = {0, 0}, double radius = 1.0) {
  std::vector<Vertex> v{center};
  for (int k = 0; k < 6; ++k) {
    const double a = k * std::numbers::pi / 3.0;
    v.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  std::vector<Triangle> t;
  for (Index k = 0; k < 6; ++k) t.push_back({0, 1 + k, 1 + (k + 1) % 6});
  return Mesh::build(std::move(v), t);
}

/// Two thin triangles on edge (0,0)-(2,0) with apexes (1,0.2) and (1,-0.2).
inline Mesh thin_pair() {
  std::vector<Vertex> v{{0, 0}, {2, 0}, {1, 0.2}, {1, -0.2}};
  std::vector<Triangle> t{{0, 1, 2}, {1, 0, 3}};
  return Mesh::build(std::move(v), t);
}

/// Random meshes whose interior vertices all have closed fans: jittered
/// grids of both patterns and Delaunay triangulations of random points.
inline Mesh random_closed_fan_mesh(std::uint64_t seed) {
  SplitMix64 rng(seed * 7919 + 13);
  switch (seed % 3) {
    case 0: {
      GridSpec g;
      g.nx = 2 + static_cast<int>(rng.below(6));
      g.ny = 2 + static_cast<int>(rng.below(6));
      g.width = rng.uniform(0.5, 3.0);
      g.height = rng.uniform(0.5, 3.0);
      g.jitter = rng.uniform(0.0, 0.45);
      g.seed = seed;
      return structured_grid(g);
    }
    case 1: {
      GridSpec g;
      g.nx = 2 + static_cast<int>(rng.below(5));
      g.ny = 2 + static_cast<int>(rng.below(5));
      g.pattern = GridPattern::union_jack;
      g.jitter = rng.uniform(0.0, 0.45);
      g.seed = seed;
      return structured_grid(g);
    }
    default: {
      const auto pts = random_points(10 + rng.below(40), seed, rng.uniform(0.5, 5.0), rng.uniform(0.5, 5.0));
      return delaunay(pts, seed);
    }
  }
}

inline GridSpec canonical_grid_spec() {
  GridSpec g;
  g.nx = 8;
  g.ny = 8;
  g.pattern = GridPattern::diagonal;
  g.jitter = 0.3;
  g.seed = 1;
  return g;
}

inline Mesh canonical_structured() { return structured_grid(canonical_grid_spec()); }

inline Mesh canonical_unstructured() { return delaunay(random_points(50, 1), 1); }

}  // namespace trismooth::testing
