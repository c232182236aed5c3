#include "trismooth/swap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace trismooth {

namespace {

double angle_at(const Vertex& apex, const Vertex& p, const Vertex& q) {
  const double ux = p.x - apex.x, uy = p.y - apex.y;
  const double vx = q.x - apex.x, vy = q.y - apex.y;
  return std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy);
}

std::string edge_name(Index u, Index v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

double min_angle(const Vertex& a, const Vertex& b, const Vertex& c) {
  return std::min({angle_at(a, b, c), angle_at(b, c, a), angle_at(c, a, b)});
}

std::optional<EdgeQuad> edge_quad(const Mesh& mesh, Index u, Index v) {
  const auto tris = mesh.triangles_on_edge(u, v);
  if (tris.size() != 2) return std::nullopt;
  EdgeQuad quad{};
  quad.u = u;
  quad.v = v;
  bool have_left = false, have_right = false;
  for (Index t : tris) {
    const Triangle r = rotate_to_front(mesh.triangle(t), u);
    if (r.b == v) {
      quad.left = t;
      quad.p = r.c;
      have_left = true;
    } else {
      quad.right = t;
      quad.q = r.b;
      have_right = true;
    }
  }
  if (!have_left || !have_right) return std::nullopt;  // inconsistent orientation
  return quad;
}

bool should_swap(const Mesh& mesh, const EdgeQuad& quad) {
  const Vertex &u = mesh.vertex(quad.u), &v = mesh.vertex(quad.v);
  const Vertex &p = mesh.vertex(quad.p), &q = mesh.vertex(quad.q);
  // boundary u -> q -> v -> p must turn left at every corner
  if (!(signed_area(u, q, v) > 0.0 && signed_area(q, v, p) > 0.0 && signed_area(v, p, u) > 0.0 &&
        signed_area(p, u, q) > 0.0)) {
    return false;
  }
  const double before = std::min(min_angle(u, v, p), min_angle(v, u, q));
  const double after = std::min(min_angle(p, u, q), min_angle(q, v, p));
  return after > before;
}

bool should_swap(const Mesh& mesh, Index t0, Index t1) {
  const Triangle &a = mesh.triangle(t0), &b = mesh.triangle(t1);
  std::vector<Index> shared;
  for (Index w : a.as_array()) {
    if (b.contains(w)) shared.push_back(w);
  }
  if (t0 == t1 || shared.size() != 2) {
    throw MeshError("triangles " + std::to_string(t0) + " and " + std::to_string(t1) +
                    " do not share exactly one edge");
  }
  const auto quad = edge_quad(mesh, shared[0], shared[1]);
  if (!quad) throw MeshError("edge " + edge_name(shared[0], shared[1]) + " is not interior");
  return should_swap(mesh, *quad);
}

void swap_edge(Mesh& mesh, Edge edge) {
  const auto quad = edge_quad(mesh, edge.lo, edge.hi);
  if (!quad) throw MeshError("edge " + edge_name(edge.lo, edge.hi) + " is not an interior edge");
  if (!should_swap(mesh, *quad)) {
    throw MeshError("flipping edge " + edge_name(edge.lo, edge.hi) + " does not improve the pair");
  }
  mesh.replace_triangles(quad->left, Triangle{quad->p, quad->u, quad->q}, quad->right,
                         Triangle{quad->q, quad->v, quad->p});
}

SwapReport swap_pass(Mesh& mesh, int max_passes) {
  SwapReport report;
  while (report.passes < max_passes) {
    ++report.passes;
    int flips = 0;
    for (const Edge& e : mesh.edges()) {
      const auto quad = edge_quad(mesh, e.lo, e.hi);
      if (!quad || !should_swap(mesh, *quad)) continue;
      mesh.replace_triangles(quad->left, Triangle{quad->p, quad->u, quad->q}, quad->right,
                             Triangle{quad->q, quad->v, quad->p});
      ++flips;
    }
    report.flips += flips;
    if (flips == 0) {
      report.locally_optimal = true;
      break;
    }
  }
  return report;
}

}  // namespace trismooth
