#include "trismooth/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

namespace trismooth {

double signed_area(const Vertex& p, const Vertex& q, const Vertex& r) {
  return 0.5 * ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x));
}

Triangle rotate_to_front(const Triangle& t, Index v) {
  if (t.a == v) return t;
  if (t.b == v) return {t.b, t.c, t.a};
  if (t.c == v) return {t.c, t.a, t.b};
  throw MeshError("vertex " + std::to_string(v) + " is not a corner of the triangle");
}

Mesh Mesh::build(std::vector<Vertex> vertices, std::span<const std::array<Index, 3>> triangles) {
  std::vector<Triangle> tris;
  tris.reserve(triangles.size());
  for (const auto& t : triangles) tris.push_back({t[0], t[1], t[2]});
  return build(std::move(vertices), std::span<const Triangle>(tris));
}

Mesh Mesh::build(std::vector<Vertex> vertices, std::span<const Triangle> triangles) {
  const auto n = static_cast<Index>(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!std::isfinite(vertices[i].x) || !std::isfinite(vertices[i].y)) {
      throw MeshError("vertex " + std::to_string(i) + " has a non-finite coordinate");
    }
  }

  Mesh mesh;
  mesh.vertices_ = std::move(vertices);
  mesh.triangles_.reserve(triangles.size());
  mesh.incidence_.assign(mesh.vertices_.size(), {});

  std::map<Edge, int> edge_uses;
  for (std::size_t ti = 0; ti < triangles.size(); ++ti) {
    Triangle t = triangles[ti];
    for (int k = 0; k < 3; ++k) {
      if (t[k] < 0 || t[k] >= n) {
        std::ostringstream msg;
        msg << "triangle " << ti << " references vertex " << t[k] << " but the mesh has " << n
            << " vertices";
        throw MeshError(msg.str());
      }
    }
    if (t.a == t.b || t.b == t.c || t.a == t.c) {
      throw MeshError("triangle " + std::to_string(ti) + " repeats a vertex index");
    }
    if (trismooth::signed_area(mesh.vertices_[t.a], mesh.vertices_[t.b], mesh.vertices_[t.c]) < 0.0) {
      std::swap(t.b, t.c);
    }
    for (int k = 0; k < 3; ++k) {
      const Edge e = Edge::of(t[k], t[(k + 1) % 3]);
      if (++edge_uses[e] > 2) {
        std::ostringstream msg;
        msg << "edge (" << e.lo << ", " << e.hi << ") is shared by more than two triangles";
        throw MeshError(msg.str());
      }
    }
    const auto idx = static_cast<Index>(mesh.triangles_.size());
    for (int k = 0; k < 3; ++k) mesh.incidence_[static_cast<std::size_t>(t[k])].push_back(idx);
    mesh.triangles_.push_back(t);
  }
  mesh.rebuild_boundary();
  return mesh;
}

void Mesh::rebuild_boundary() {
  std::map<Edge, int> edge_uses;
  for (const auto& t : triangles_) {
    for (int k = 0; k < 3; ++k) ++edge_uses[Edge::of(t[k], t[(k + 1) % 3])];
  }
  boundary_.assign(vertices_.size(), 0);
  for (const auto& [e, uses] : edge_uses) {
    if (uses == 1) {
      boundary_[static_cast<std::size_t>(e.lo)] = 1;
      boundary_[static_cast<std::size_t>(e.hi)] = 1;
    }
  }
}

void Mesh::set_positions(std::vector<Vertex> positions) {
  if (positions.size() != vertices_.size()) {
    throw MeshError("position count does not match vertex count");
  }
  vertices_ = std::move(positions);
}

double Mesh::signed_area(Index t) const {
  const Triangle& tri = triangle(t);
  return trismooth::signed_area(vertex(tri.a), vertex(tri.b), vertex(tri.c));
}

std::vector<Edge> Mesh::edges() const {
  std::vector<Edge> out;
  out.reserve(triangles_.size() * 3);
  for (const auto& t : triangles_) {
    for (int k = 0; k < 3; ++k) out.push_back(Edge::of(t[k], t[(k + 1) % 3]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Index> Mesh::triangles_on_edge(Index u, Index v) const {
  std::vector<Index> out;
  for (Index t : incident(u)) {
    if (triangle(t).contains(v)) out.push_back(t);
  }
  return out;
}

std::vector<Index> Mesh::neighbors(Index v) const {
  std::vector<Index> out;
  for (Index t : incident(v)) {
    for (Index w : triangle(t).as_array()) {
      if (w != v) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FanEntry> Mesh::interior_fan(Index v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size()) {
    throw MeshError("vertex " + std::to_string(v) + " out of range");
  }
  if (is_boundary(v)) {
    throw MeshError("vertex " + std::to_string(v) + " is on the boundary; its fan is open");
  }
  const auto& inc = incident(v);
  if (inc.empty()) throw MeshError("vertex " + std::to_string(v) + " has no incident triangles");

  // q -> entry, each incident triangle rotated so v is first
  std::unordered_map<Index, FanEntry> by_q;
  for (Index t : inc) {
    const Triangle r = rotate_to_front(triangle(t), v);
    if (!by_q.emplace(r.b, FanEntry{t, r.b, r.c}).second) {
      throw MeshError("non-manifold neighbourhood around vertex " + std::to_string(v));
    }
  }

  std::vector<FanEntry> fan;
  fan.reserve(inc.size());
  FanEntry cur = by_q.at(rotate_to_front(triangle(inc.front()), v).b);
  const Index start = cur.q;
  for (;;) {
    fan.push_back(cur);
    auto it = by_q.find(cur.r);
    if (it == by_q.end()) {
      throw MeshError("fan around vertex " + std::to_string(v) + " is not closed");
    }
    if (it->second.q == start) break;
    cur = it->second;
  }
  if (fan.size() != inc.size()) {
    throw MeshError("non-manifold neighbourhood around vertex " + std::to_string(v));
  }
  return fan;
}

void Mesh::replace_triangles(Index t0, Triangle n0, Index t1, Triangle n1) {
  // Flips keep the boundary edge set, so boundary flags stay valid.
  auto drop = [this](Index t) {
    for (Index w : triangle(t).as_array()) {
      auto& inc = incidence_[static_cast<std::size_t>(w)];
      inc.erase(std::remove(inc.begin(), inc.end(), t), inc.end());
    }
  };
  auto add = [this](Index t) {
    for (Index w : triangle(t).as_array()) {
      auto& inc = incidence_[static_cast<std::size_t>(w)];
      inc.insert(std::lower_bound(inc.begin(), inc.end(), t), t);
    }
  };
  drop(t0);
  drop(t1);
  triangles_[static_cast<std::size_t>(t0)] = n0;
  triangles_[static_cast<std::size_t>(t1)] = n1;
  add(t0);
  add(t1);
}

std::vector<Index> Mesh::degenerate_triangles() const {
  std::vector<Index> out;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    if (signed_area(static_cast<Index>(t)) <= 0.0) out.push_back(static_cast<Index>(t));
  }
  return out;
}

double Mesh::bbox_diagonal() const {
  if (vertices_.empty()) return 0.0;
  double x0 = vertices_[0].x, x1 = x0, y0 = vertices_[0].y, y1 = y0;
  for (const auto& p : vertices_) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

}  // namespace trismooth
