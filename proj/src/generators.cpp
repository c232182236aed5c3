#include "trismooth/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace trismooth {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // rejection keeps the draw unbiased
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

GridPattern parse_grid_pattern(std::string_view name) {
  if (name == "diagonal") return GridPattern::diagonal;
  if (name == "union-jack" || name == "union_jack") return GridPattern::union_jack;
  throw std::invalid_argument("unknown grid pattern '" + std::string(name) + "'");
}

std::string_view to_string(GridPattern p) {
  return p == GridPattern::diagonal ? "diagonal" : "union-jack";
}

namespace predicates {

int orientation(const Vertex& a, const Vertex& b, const Vertex& c) {
  const double l = (b.x - a.x) * (c.y - a.y);
  const double r = (b.y - a.y) * (c.x - a.x);
  const double det = l - r;
  const double scale = std::abs(l) + std::abs(r);
  if (std::abs(det) <= kRelativeEps * scale) return 0;
  return det > 0.0 ? 1 : -1;
}

int in_circle(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double bc = bdx * cdy - cdx * bdy;
  const double ca = cdx * ady - adx * cdy;
  const double ab = adx * bdy - bdx * ady;
  const double det = alift * bc + blift * ca + clift * ab;
  const double permanent = alift * (std::abs(bdx * cdy) + std::abs(cdx * bdy)) +
                           blift * (std::abs(cdx * ady) + std::abs(adx * cdy)) +
                           clift * (std::abs(adx * bdy) + std::abs(bdx * ady));
  if (std::abs(det) <= kRelativeEps * permanent) return 0;
  return det > 0.0 ? 1 : -1;
}

}  // namespace predicates

Mesh structured_grid(const GridSpec& spec) {
  if (spec.nx < 1 || spec.ny < 1) throw std::invalid_argument("grid needs nx, ny >= 1");
  if (!(spec.width > 0.0) || !(spec.height > 0.0)) {
    throw std::invalid_argument("grid width and height must be positive");
  }
  if (!(spec.jitter >= 0.0 && spec.jitter < 0.5)) {
    throw std::invalid_argument("grid jitter must lie in [0, 0.5)");
  }

  const int nx = spec.nx, ny = spec.ny;
  const double dx = spec.width / nx, dy = spec.height / ny;
  auto node = [nx](int i, int j) { return static_cast<Index>(j * (nx + 1) + i); };

  std::vector<Vertex> verts;
  verts.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1) + nx * ny));
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) verts.push_back({i * dx, j * dy});
  }

  std::vector<Triangle> tris;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Index a = node(i, j), b = node(i + 1, j), c = node(i + 1, j + 1), d = node(i, j + 1);
      if (spec.pattern == GridPattern::diagonal) {
        tris.push_back({a, b, c});
        tris.push_back({a, c, d});
      } else {
        const auto m = static_cast<Index>(verts.size());
        verts.push_back({(i + 0.5) * dx, (j + 0.5) * dy});
        tris.push_back({a, b, m});
        tris.push_back({b, c, m});
        tris.push_back({c, d, m});
        tris.push_back({d, a, m});
      }
    }
  }

  Mesh mesh = Mesh::build(std::move(verts), tris);
  if (spec.jitter == 0.0) return mesh;

  SplitMix64 rng(spec.seed);
  std::vector<Vertex> pos = mesh.vertices();
  auto fan_positive = [&](Index v) {
    for (Index t : mesh.incident(v)) {
      const Triangle& tri = mesh.triangle(t);
      if (!(signed_area(pos[tri.a], pos[tri.b], pos[tri.c]) > 0.0)) return false;
    }
    return true;
  };
  constexpr int kMaxDraws = 64;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const auto v = static_cast<Index>(i);
    if (mesh.is_boundary(v)) continue;
    const Vertex home = pos[i];
    bool placed = false;
    for (int draw = 0; draw < kMaxDraws && !placed; ++draw) {
      pos[i] = {home.x + rng.uniform(-spec.jitter, spec.jitter) * dx,
                home.y + rng.uniform(-spec.jitter, spec.jitter) * dy};
      placed = fan_positive(v);
    }
    if (!placed) pos[i] = home;
  }
  mesh.set_positions(std::move(pos));
  return mesh;
}

std::vector<Vertex> random_points(std::size_t n, std::uint64_t seed, double width, double height) {
  SplitMix64 rng(seed);
  std::vector<Vertex> pts;
  std::set<std::pair<double, double>> seen;
  pts.reserve(n);
  while (pts.size() < n) {
    const Vertex p{rng.uniform() * width, rng.uniform() * height};
    if (seen.emplace(p.x, p.y).second) pts.push_back(p);
  }
  return pts;
}

namespace {

constexpr Index kInfinite = -1;

// Triangles may carry the symbolic vertex at infinity in their last slot; such
// a "ghost" (x, y, inf) stands for the half-plane left of x -> y, outside the
// current hull.
struct BwTriangle {
  Index a, b, c;
  bool ghost() const { return c == kInfinite; }
};

int raw_orientation(const Vertex& a, const Vertex& b, const Vertex& c) {
  const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (det > 0.0) - (det < 0.0);
}

bool strictly_between(const Vertex& a, const Vertex& b, const Vertex& p) {
  const double t = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return t > 0.0 && t < len2;
}

bool in_conflict(std::span<const Vertex> pts, const BwTriangle& t, const Vertex& p) {
  if (t.ghost()) {
    const Vertex &x = pts[t.a], &y = pts[t.b];
    const int o = raw_orientation(x, y, p);
    return o > 0 || (o == 0 && strictly_between(x, y, p));
  }
  const Vertex &a = pts[t.a], &b = pts[t.b], &c = pts[t.c];
  const double adx = a.x - p.x, ady = a.y - p.y;
  const double bdx = b.x - p.x, bdy = b.y - p.y;
  const double cdx = c.x - p.x, cdy = c.y - p.y;
  const double det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) +
                     (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy) +
                     (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
  return det > 0.0;
}

BwTriangle make_triangle(Index x, Index y, Index p) {
  if (x == kInfinite) return {y, p, kInfinite};
  if (y == kInfinite) return {p, x, kInfinite};
  return {x, y, p};
}

}  // namespace

Mesh delaunay(std::span<const Vertex> points, std::uint64_t seed) {
  const std::size_t n = points.size();
  if (n < 3) throw std::invalid_argument("Delaunay triangulation needs at least three points");
  {
    std::set<std::pair<double, double>> seen;
    for (const auto& p : points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("non-finite point");
      if (!seen.emplace(p.x, p.y).second) {
        throw std::invalid_argument("duplicate point in Delaunay input");
      }
    }
  }

  std::vector<Index> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Index>(i);
  SplitMix64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

  std::size_t third = 2;
  while (third < n && predicates::orientation(points[order[0]], points[order[1]], points[order[third]]) == 0) {
    ++third;
  }
  if (third == n) throw std::invalid_argument("all points are collinear");
  std::swap(order[2], order[third]);

  Index a = order[0], b = order[1], c = order[2];
  if (raw_orientation(points[a], points[b], points[c]) < 0) std::swap(b, c);
  std::vector<BwTriangle> tris{{a, b, c}, {b, a, kInfinite}, {c, b, kInfinite}, {a, c, kInfinite}};

  std::vector<BwTriangle> kept;
  std::set<std::pair<Index, Index>> cavity_edges;
  for (std::size_t k = 3; k < n; ++k) {
    const Index p = order[k];
    kept.clear();
    cavity_edges.clear();
    std::vector<BwTriangle> bad;
    for (const auto& t : tris) {
      (in_conflict(points, t, points[p]) ? bad : kept).push_back(t);
    }
    for (const auto& t : bad) {
      for (auto [x, y] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) {
        cavity_edges.emplace(x, y);
      }
    }
    for (const auto& [x, y] : cavity_edges) {
      if (!cavity_edges.contains({y, x})) kept.push_back(make_triangle(x, y, p));
    }
    tris.swap(kept);
  }

  std::vector<Triangle> out;
  for (const auto& t : tris) {
    if (t.ghost()) continue;
    if (raw_orientation(points[t.a], points[t.b], points[t.c]) <= 0) {
      throw MeshError("Delaunay construction produced an inverted triangle");
    }
    out.push_back(rotate_to_front({t.a, t.b, t.c}, std::min({t.a, t.b, t.c})));
  }
  std::sort(out.begin(), out.end(), [](const Triangle& l, const Triangle& r) {
    return l.as_array() < r.as_array();
  });
  return Mesh::build(std::vector<Vertex>(points.begin(), points.end()), out);
}

}  // namespace trismooth
