#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "trismooth/smoothing.hpp"

using namespace trismooth;
using namespace trismooth::testing;

namespace {

const double kHalfRoot3 = std::sqrt(3.0) / 2.0;

double max_coordinate(const Mesh& m) {
  double s = 1.0;
  for (const auto& v : m.vertices()) s = std::max({s, std::abs(v.x), std::abs(v.y)});
  return s;
}

}  // namespace

TEST_CASE("equilateral apex examples") {
  const Vertex a = equilateral_apex({0, 0}, {1, 0});
  CHECK(a.x == doctest::Approx(0.5));
  CHECK(a.y == doctest::Approx(kHalfRoot3));

  const Vertex b = equilateral_apex({0, 0}, {0, 2});
  CHECK(b.x == doctest::Approx(-std::sqrt(3.0)));
  CHECK(b.y == doctest::Approx(1.0));

  const Vertex c = equilateral_apex({2.5, -1}, {2.5, -1});
  CHECK(c.x == 2.5);
  CHECK(c.y == -1);
}

TEST_CASE("apex lies on the inner side of a counter-clockwise triangle") {
  SplitMix64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Vertex a{rng.uniform(-1, 1), rng.uniform(-1, 1)}, q{rng.uniform(-1, 1), rng.uniform(-1, 1)},
        r{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (signed_area(a, q, r) <= 1e-6) continue;
    CHECK(signed_area(equilateral_apex(q, r), q, r) > 0.0);
  }
}

TEST_CASE("length weights") {
  const std::vector<double> four{1, 1, 1, 1};
  for (double w : lw_weights(four)) CHECK(w == 0.25);
  const std::vector<double> six(6, 2.0);
  for (double w : lw_weights(six)) CHECK(w == doctest::Approx(1.0 / 6.0));
  const std::vector<double> uneven{1, 3};
  CHECK(lw_weights(uneven) == std::vector<double>{0.25, 0.75});
  CHECK_THROWS_AS(lw_weights(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(lw_weights(std::vector<double>{0, 0}), std::invalid_argument);
}

TEST_CASE("length weights of a hexagon fan are one sixth and sum to one on random fans") {
  const Mesh hex = hexagon_fan();
  for (double w : lw_weights(hex, hex.interior_fan(0))) CHECK(w == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    const Mesh m = random_closed_fan_mesh(seed);
    for (std::size_t i = 0; i < m.vertex_count(); ++i) {
      if (m.is_boundary(static_cast<Index>(i))) continue;
      const auto w = lw_weights(m, m.interior_fan(static_cast<Index>(i)));
      CHECK(std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("laplacian step") {
  const Mesh m = square_with_center({0.2, 0.7});
  const auto step = laplacian_step(m);
  CHECK(step.positions[4].x == doctest::Approx(0.5));
  CHECK(step.positions[4].y == doctest::Approx(0.5));
  for (Index v = 0; v < 4; ++v) CHECK(step.positions[v] == m.vertex(v));

  const auto fixed = laplacian_step(square_with_center());
  CHECK(fixed.max_displacement == 0.0);
}

TEST_CASE("mdm step: square centre is a fixed point of the four apexes") {
  const Mesh m = square_with_center();
  // apexes (0.5,0.866), (0.134,0.5), (0.5,0.134), (0.866,0.5)
  const auto fan = m.interior_fan(4);
  Vertex sum;
  for (const auto& f : fan) {
    const Vertex apex = equilateral_apex(m.vertex(f.q), m.vertex(f.r));
    sum.x += apex.x;
    sum.y += apex.y;
  }
  CHECK(sum.x / 4 == doctest::Approx(0.5));
  CHECK(sum.y / 4 == doctest::Approx(0.5));
  const auto step = mdm_step(m);
  CHECK(step.positions[4].x == doctest::Approx(0.5));
  CHECK(step.positions[4].y == doctest::Approx(0.5));
  CHECK(step.max_displacement < 1e-15);
}

TEST_CASE("mdm step on a displaced hexagon centre returns to the centroid") {
  const Mesh m = hexagon_fan({0.3, 0.2});
  const auto step = mdm_step(m);
  CHECK(std::abs(step.positions[0].x) < 1e-12);
  CHECK(std::abs(step.positions[0].y) < 1e-12);
  const auto dense = dense_mdm_step(m);
  CHECK(std::abs(dense[0].x - step.positions[0].x) < 1e-12);
  CHECK(std::abs(dense[0].y - step.positions[0].y) < 1e-12);
}

TEST_CASE("single triangle never moves") {
  const Mesh m = Mesh::build({{0, 0}, {1, 0}, {0.2, 0.3}}, std::vector<Triangle>{{0, 1, 2}});
  for (auto method : {SmoothMethod::laplacian, SmoothMethod::mdm, SmoothMethod::lw_mdm}) {
    const auto step = smoothing_step(m, method);
    CHECK(step.positions == m.vertices());
    CHECK(step.max_displacement == 0.0);
  }
}

TEST_CASE("mdm agrees with laplacian on closed fans") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Mesh m = random_closed_fan_mesh(seed);
    const auto lap = laplacian_step(m), mdm = mdm_step(m);
    const double tol = 1e-9 * m.bbox_diagonal();
    for (std::size_t i = 0; i < m.vertex_count(); ++i) {
      CHECK(std::hypot(lap.positions[i].x - mdm.positions[i].x, lap.positions[i].y - mdm.positions[i].y) <= tol);
    }
  }
}

TEST_CASE("mdm matches the dense assembled system") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Mesh m = random_closed_fan_mesh(seed);
    if (m.vertex_count() > 20) continue;
    const auto dense = dense_mdm_step(m);
    const auto step = mdm_step(m);
    const double scale = max_coordinate(m);
    for (std::size_t i = 0; i < m.vertex_count(); ++i) {
      CHECK(std::abs(dense[i].x - step.positions[i].x) <= 1e-12 * scale);
      CHECK(std::abs(dense[i].y - step.positions[i].y) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("lw-mdm reduces to mdm for equal opposite edges") {
  for (const Mesh& m : {square_with_center({0.4, 0.45}), hexagon_fan({0.1, -0.2}, 2.0)}) {
    const auto lw = lw_mdm_step(m), mdm = mdm_step(m);
    for (std::size_t i = 0; i < m.vertex_count(); ++i) {
      CHECK(std::abs(lw.positions[i].x - mdm.positions[i].x) <= 1e-12);
      CHECK(std::abs(lw.positions[i].y - mdm.positions[i].y) <= 1e-12);
    }
  }
  const auto sq = lw_mdm_step(square_with_center());
  CHECK(sq.positions[4].x == doctest::Approx(0.5));
  CHECK(sq.positions[4].y == doctest::Approx(0.5));
}

TEST_CASE("lw-mdm equals the brute-force weighted apex sum") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Mesh m = random_closed_fan_mesh(seed);
    const auto step = lw_mdm_step(m);
    const double scale = max_coordinate(m);
    for (std::size_t i = 0; i < m.vertex_count(); ++i) {
      const auto v = static_cast<Index>(i);
      if (m.is_boundary(v)) continue;
      const Vertex expect = brute_lw_position(m, v);
      CHECK(std::abs(expect.x - step.positions[i].x) <= 1e-12 * scale);
      CHECK(std::abs(expect.y - step.positions[i].y) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("lw-mdm weights follow the current edge lengths") {
  // stretch one rim vertex: the weights must change with it
  Mesh m = hexagon_fan();
  auto pos = m.vertices();
  pos[1] = {2.0, 0.0};
  m.set_positions(pos);
  const auto step = lw_mdm_step(m);
  const Vertex expect = brute_lw_position(m, 0);
  CHECK(step.positions[0].x == doctest::Approx(expect.x).epsilon(1e-12));
  CHECK(step.positions[0].y == doctest::Approx(expect.y).epsilon(1e-12));
  CHECK(step.positions[0] != mdm_step(m).positions[0]);
}

TEST_CASE("jacobi steps do not depend on vertex numbering") {
  const Mesh m = random_closed_fan_mesh(2);
  const std::size_t n = m.vertex_count();
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 rng(77);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  // new index perm[i] holds old vertex i
  std::vector<Vertex> verts(n);
  for (std::size_t i = 0; i < n; ++i) verts[static_cast<std::size_t>(perm[i])] = m.vertices()[i];
  std::vector<Triangle> tris;
  for (auto t : m.triangles()) tris.push_back({perm[t.a], perm[t.b], perm[t.c]});
  std::reverse(tris.begin(), tris.end());
  const Mesh shuffled = Mesh::build(std::move(verts), tris);

  for (auto method : {SmoothMethod::laplacian, SmoothMethod::mdm, SmoothMethod::lw_mdm}) {
    const auto a = smoothing_step(m, method), b = smoothing_step(shuffled, method);
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex& p = a.positions[i];
      const Vertex& q = b.positions[static_cast<std::size_t>(perm[i])];
      CHECK(std::abs(p.x - q.x) <= 1e-13);
      CHECK(std::abs(p.y - q.y) <= 1e-13);
    }
  }
}

TEST_CASE("smooth: converged mesh stops after one iteration") {
  Mesh m = square_with_center();
  const auto r = smooth(m, {SmoothMethod::mdm, 1e-9, 100, false});
  CHECK(r.iterations_run == 1);
  CHECK(r.converged);
  CHECK(r.max_displacement_last <= 1e-9);
}

TEST_CASE("smooth: iteration cap") {
  Mesh m = random_closed_fan_mesh(0);
  const auto r = smooth(m, {SmoothMethod::laplacian, 0.0, 5, false});
  CHECK(r.iterations_run == 5);
  CHECK_FALSE(r.converged);
}

TEST_CASE("smooth: perturbed hexagon converges to the centroid under mdm") {
  Mesh m = hexagon_fan({0.35, -0.25});
  const auto r = smooth(m, {SmoothMethod::mdm, 1e-12, 100, false});
  CHECK(r.converged);
  CHECK(std::hypot(m.vertex(0).x, m.vertex(0).y) <= 1e-9);
}

TEST_CASE("smooth rejects bad configs") {
  Mesh m = square_with_center();
  CHECK_THROWS_AS(smooth(m, {SmoothMethod::mdm, 1e-6, 0, false}), std::invalid_argument);
  CHECK_THROWS_AS(smooth(m, {SmoothMethod::mdm, -1.0, 10, false}), std::invalid_argument);
  CHECK_THROWS_AS(parse_smooth_method("gauss-seidel"), std::invalid_argument);
  CHECK(parse_smooth_method("lw-mdm") == SmoothMethod::lw_mdm);
}

TEST_CASE("boundary vertices are bitwise fixed and safe mode keeps orientation") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    for (auto method : {SmoothMethod::laplacian, SmoothMethod::mdm, SmoothMethod::lw_mdm}) {
      Mesh m = random_closed_fan_mesh(seed);
      const auto before = m.vertices();
      smooth(m, {method, std::nullopt, 100, true});
      for (std::size_t i = 0; i < m.vertex_count(); ++i) {
        if (m.is_boundary(static_cast<Index>(i))) CHECK(m.vertices()[i] == before[i]);
      }
      CHECK(m.degenerate_triangles().empty());
    }
  }
}

TEST_CASE("safe mode blocks an inverting move that plain laplacian makes") {
  // L-shaped domain: the interior node's neighbour centroid lies outside the
  // fan's kernel, so the plain step inverts a triangle
  std::vector<Vertex> v{{0, 0}, {2, 0}, {2, 0.2}, {0.2, 0.2}, {0.2, 2}, {0, 2}, {0.12, 0.12}};
  std::vector<Triangle> t{{6, 0, 1}, {6, 1, 2}, {6, 2, 3}, {6, 3, 4}, {6, 4, 5}, {6, 5, 0}};
  Mesh plain = Mesh::build(v, t);
  REQUIRE(plain.degenerate_triangles().empty());
  smooth(plain, {SmoothMethod::laplacian, 0.0, 1, false});
  CHECK_FALSE(plain.degenerate_triangles().empty());

  Mesh safe = Mesh::build(v, t);
  smooth(safe, {SmoothMethod::laplacian, 0.0, 1, true});
  CHECK(safe.degenerate_triangles().empty());
  CHECK(safe.vertex(6) == v[6]);
}
