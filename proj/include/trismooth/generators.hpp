#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "trismooth/mesh.hpp"

namespace trismooth {

enum class GridPattern { diagonal, union_jack };

GridPattern parse_grid_pattern(std::string_view name);
std::string_view to_string(GridPattern p);

struct GridSpec {
  int nx = 8;
  int ny = 8;
  double width = 1.0;
  double height = 1.0;
  GridPattern pattern = GridPattern::diagonal;
  /// Interior-node displacement bound as a fraction of the cell size, in
  /// [0, 0.5).
  double jitter = 0.0;
  std::uint64_t seed = 0;
};

/// Rectangular grid split into triangles. `diagonal` cuts each cell along
/// its lower-left to upper-right diagonal (2 nx ny triangles); `union_jack`
/// adds a centre node per cell and fans it (4 nx ny triangles). Interior
/// nodes get seeded uniform jitter; a draw that would invert an element is
/// redrawn.
Mesh structured_grid(const GridSpec& spec);

/// Bowyer-Watson incremental Delaunay triangulation. Points are inserted in
/// an order shuffled by `seed`. Throws std::invalid_argument for fewer than
/// three distinct points, duplicates or an all-collinear set.
Mesh delaunay(std::span<const Vertex> points, std::uint64_t seed = 0);

/// n seeded uniform points in [0, width] x [0, height], duplicates skipped.
std::vector<Vertex> random_points(std::size_t n, std::uint64_t seed, double width = 1.0,
                                  double height = 1.0);

/// Orientation and in-circle tests with a relative epsilon of 1e-12.
namespace predicates {
constexpr double kRelativeEps = 1e-12;
/// +1 counter-clockwise, -1 clockwise, 0 within tolerance of collinear.
int orientation(const Vertex& a, const Vertex& b, const Vertex& c);
/// +1 if d is strictly inside the circumcircle of counter-clockwise (a, b, c),
/// -1 if strictly outside, 0 within tolerance of the circle.
int in_circle(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d);
}  // namespace predicates

/// SplitMix64; small, seedable and identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

}  // namespace trismooth
