#include <doctest.h>

#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "trismooth/generators.hpp"
#include "trismooth/quality.hpp"

using namespace trismooth;
using namespace trismooth::testing;

TEST_CASE("grid counts") {
  GridSpec g;
  g.nx = g.ny = 1;
  auto m = structured_grid(g);
  CHECK(m.vertex_count() == 4);
  CHECK(m.triangle_count() == 2);

  g.nx = g.ny = 8;
  m = structured_grid(g);
  CHECK(m.vertex_count() == 81);
  CHECK(m.triangle_count() == 128);

  g.nx = g.ny = 2;
  g.pattern = GridPattern::union_jack;
  m = structured_grid(g);
  CHECK(m.vertex_count() == 13);
  CHECK(m.triangle_count() == 16);

  g.nx = 3;
  g.ny = 5;
  g.pattern = GridPattern::diagonal;
  CHECK(structured_grid(g).triangle_count() == 30);
  g.pattern = GridPattern::union_jack;
  CHECK(structured_grid(g).triangle_count() == 60);
}

TEST_CASE("unjittered grids are congruent per pattern") {
  for (auto pattern : {GridPattern::diagonal, GridPattern::union_jack}) {
    GridSpec g;
    g.nx = 4;
    g.ny = 3;
    g.width = 2.0;
    g.height = 1.5;
    g.pattern = pattern;
    const Mesh m = structured_grid(g);
    const auto pts = scatter_data(m);
    for (const auto& p : pts) {
      CHECK(p.area == doctest::Approx(pts[0].area).epsilon(1e-12));
      CHECK(p.perimeter == doctest::Approx(pts[0].perimeter).epsilon(1e-12));
    }
  }
}

TEST_CASE("jitter moves interior nodes only, deterministically, without inversions") {
  GridSpec g = canonical_grid_spec();
  const Mesh a = structured_grid(g), b = structured_grid(g);
  CHECK(a.vertices() == b.vertices());
  GridSpec flat = g;
  flat.jitter = 0.0;
  const Mesh base = structured_grid(flat);
  int moved = 0;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    const auto v = static_cast<Index>(i);
    if (a.is_boundary(v)) {
      CHECK(a.vertex(v) == base.vertex(v));
    } else {
      moved += a.vertex(v) != base.vertex(v);
      CHECK(std::abs(a.vertex(v).x - base.vertex(v).x) <= 0.3 / 8 + 1e-15);
      CHECK(std::abs(a.vertex(v).y - base.vertex(v).y) <= 0.3 / 8 + 1e-15);
    }
  }
  CHECK(moved == 49);
  CHECK(a.degenerate_triangles().empty());

  g.seed = 2;
  CHECK(structured_grid(g).vertices() != a.vertices());
}

TEST_CASE("invalid grid specs") {
  GridSpec g;
  g.nx = 0;
  CHECK_THROWS_AS(structured_grid(g), std::invalid_argument);
  g.nx = 2;
  g.jitter = 0.5;
  CHECK_THROWS_AS(structured_grid(g), std::invalid_argument);
  g.jitter = -0.1;
  CHECK_THROWS_AS(structured_grid(g), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid_pattern("hex"), std::invalid_argument);
}

TEST_CASE("delaunay small cases") {
  const std::vector<Vertex> three{{0, 0}, {1, 0}, {0, 1}};
  CHECK(delaunay(three).triangle_count() == 1);

  const std::vector<Vertex> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Mesh m = delaunay(square, seed);
    CHECK(m.triangle_count() == 2);
    CHECK(circumcircle_violations(m) == 0);
  }
}

TEST_CASE("delaunay rejects bad point sets") {
  CHECK_THROWS_AS(delaunay(std::vector<Vertex>{{0, 0}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(delaunay(std::vector<Vertex>{{0, 0}, {1, 1}, {2, 2}, {3, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(delaunay(std::vector<Vertex>{{0, 0}, {1, 0}, {1, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("delaunay with collinear runs on the hull") {
  std::vector<Vertex> pts;
  for (int i = 0; i <= 4; ++i) {
    pts.push_back({i * 0.25, 0});
    pts.push_back({i * 0.25, 1});
  }
  pts.push_back({0.5, 0.5});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Mesh m = delaunay(pts, seed);
    CHECK(circumcircle_violations(m) == 0);
    CHECK(m.degenerate_triangles().empty());
    // 11 points, all 10 on the boundary: 2n - 2 - b with b boundary points
    CHECK(m.triangle_count() == 2 * 11 - 2 - 10);
  }
}

TEST_CASE("delaunay of random points: empty circumcircles and 2n-2-h") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto pts = random_points(50, seed);
    const Mesh m = delaunay(pts, seed);
    CHECK(circumcircle_violations(m, 1e-9) == 0);
    CHECK(m.triangle_count() == 2 * pts.size() - 2 - brute_hull_size(pts));
    CHECK(m.degenerate_triangles().empty());
  }
}

TEST_CASE("delaunay is insensitive to insertion order") {
  const auto pts = random_points(40, 9);
  const auto reference = triangle_set(delaunay(pts, 0));
  for (std::uint64_t seed = 1; seed < 8; ++seed) CHECK(triangle_set(delaunay(pts, seed)) == reference);
}

TEST_CASE("random points are seeded and distinct") {
  const auto a = random_points(100, 4), b = random_points(100, 4);
  CHECK(a == b);
  std::set<std::pair<double, double>> s;
  for (const auto& p : a) s.emplace(p.x, p.y);
  CHECK(s.size() == 100);
  CHECK(random_points(100, 5) != a);
}

TEST_CASE("predicates") {
  CHECK(predicates::orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(predicates::orientation({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(predicates::orientation({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(predicates::in_circle({0, 0}, {1, 0}, {0, 1}, {0.5, 0.5}) == 1);
  CHECK(predicates::in_circle({0, 0}, {1, 0}, {0, 1}, {2, 2}) == -1);
  CHECK(predicates::in_circle({0, 0}, {1, 0}, {1, 1}, {0, 1}) == 0);
}
