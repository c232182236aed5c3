#include "trismooth/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trismooth {

namespace {

constexpr double kHalfRoot3 = std::numbers::sqrt3 / 2.0;

double distance(const Vertex& p, const Vertex& q) { return std::hypot(p.x - q.x, p.y - q.y); }

bool movable(const Mesh& mesh, Index v) { return !mesh.is_boundary(v) && !mesh.incident(v).empty(); }

template <typename Relocate>
StepResult jacobi_step(const Mesh& mesh, Relocate&& relocate) {
  StepResult out;
  out.positions = mesh.vertices();
  for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
    const auto v = static_cast<Index>(i);
    if (!movable(mesh, v)) continue;
    out.positions[i] = relocate(v);
    out.max_displacement = std::max(out.max_displacement, distance(out.positions[i], mesh.vertex(v)));
  }
  return out;
}

/// Reverts moves until every triangle that was positively oriented before the
/// step still is. Reverting only shrinks the moved set, and the all-reverted
/// state is the previous one, so this terminates.
void enforce_orientation(const Mesh& mesh, std::vector<Vertex>& next) {
  const auto& prev = mesh.vertices();
  std::vector<std::uint8_t> was_positive(mesh.triangle_count());
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    was_positive[t] = mesh.signed_area(static_cast<Index>(t)) > 0.0;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
      if (!was_positive[t]) continue;
      const Triangle& tri = mesh.triangles()[t];
      if (signed_area(next[tri.a], next[tri.b], next[tri.c]) > 0.0) continue;
      for (Index w : tri.as_array()) {
        if (next[w] != prev[w]) {
          next[w] = prev[w];
          changed = true;
        }
      }
    }
  }
}

}  // namespace

std::string_view to_string(SmoothMethod m) {
  switch (m) {
    case SmoothMethod::laplacian: return "laplacian";
    case SmoothMethod::mdm: return "mdm";
    case SmoothMethod::lw_mdm: return "lw-mdm";
  }
  return "unknown";
}

SmoothMethod parse_smooth_method(std::string_view name) {
  if (name == "laplacian" || name == "ls") return SmoothMethod::laplacian;
  if (name == "mdm") return SmoothMethod::mdm;
  if (name == "lw-mdm" || name == "lw_mdm") return SmoothMethod::lw_mdm;
  throw std::invalid_argument("unknown smoothing method '" + std::string(name) + "'");
}

Vertex equilateral_apex(const Vertex& q, const Vertex& r) {
  return {0.5 * (q.x + r.x) + kHalfRoot3 * (q.y - r.y),
          kHalfRoot3 * (r.x - q.x) + 0.5 * (q.y + r.y)};
}

std::vector<double> lw_weights(std::span<const double> opposite_edge_lengths) {
  if (opposite_edge_lengths.empty()) throw std::invalid_argument("empty fan");
  double total = 0.0;
  for (double l : opposite_edge_lengths) total += l;
  if (!(total > 0.0)) throw std::invalid_argument("all opposite edges have zero length");
  std::vector<double> w;
  w.reserve(opposite_edge_lengths.size());
  for (double l : opposite_edge_lengths) w.push_back(l / total);
  return w;
}

std::vector<double> lw_weights(const Mesh& mesh, std::span<const FanEntry> fan) {
  std::vector<double> lengths;
  lengths.reserve(fan.size());
  for (const auto& f : fan) lengths.push_back(distance(mesh.vertex(f.q), mesh.vertex(f.r)));
  return lw_weights(lengths);
}

StepResult laplacian_step(const Mesh& mesh) {
  return jacobi_step(mesh, [&](Index v) {
    const auto nbrs = mesh.neighbors(v);
    Vertex sum;
    for (Index w : nbrs) {
      sum.x += mesh.vertex(w).x;
      sum.y += mesh.vertex(w).y;
    }
    const auto n = static_cast<double>(nbrs.size());
    return Vertex{sum.x / n, sum.y / n};
  });
}

StepResult mdm_step(const Mesh& mesh) {
  return jacobi_step(mesh, [&](Index v) {
    const auto& inc = mesh.incident(v);
    Vertex sum;
    for (Index t : inc) {
      const Triangle tri = rotate_to_front(mesh.triangle(t), v);
      const Vertex apex = equilateral_apex(mesh.vertex(tri.b), mesh.vertex(tri.c));
      sum.x += apex.x;
      sum.y += apex.y;
    }
    const auto e = static_cast<double>(inc.size());
    return Vertex{sum.x / e, sum.y / e};
  });
}

StepResult lw_mdm_step(const Mesh& mesh) {
  return jacobi_step(mesh, [&](Index v) {
    const auto& inc = mesh.incident(v);
    Vertex sum;
    double total = 0.0;
    for (Index t : inc) {
      const Triangle tri = rotate_to_front(mesh.triangle(t), v);
      const Vertex &q = mesh.vertex(tri.b), &r = mesh.vertex(tri.c);
      const Vertex apex = equilateral_apex(q, r);
      const double l = distance(q, r);
      sum.x += l * apex.x;
      sum.y += l * apex.y;
      total += l;
    }
    // a fan collapsed to a point gives no direction to move in
    if (!(total > 0.0)) return mesh.vertex(v);
    return Vertex{sum.x / total, sum.y / total};
  });
}

StepResult smoothing_step(const Mesh& mesh, SmoothMethod method) {
  switch (method) {
    case SmoothMethod::laplacian: return laplacian_step(mesh);
    case SmoothMethod::mdm: return mdm_step(mesh);
    case SmoothMethod::lw_mdm: return lw_mdm_step(mesh);
  }
  throw std::invalid_argument("unknown smoothing method");
}

SmoothResult smooth(Mesh& mesh, const SmoothConfig& config) {
  if (config.max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  const double tol = config.tolerance.value_or(1e-6 * mesh.bbox_diagonal());
  if (tol < 0.0) throw std::invalid_argument("tolerance must be non-negative");

  SmoothResult result;
  while (result.iterations_run < config.max_iters) {
    StepResult step = smoothing_step(mesh, config.method);
    if (config.safe_mode) {
      enforce_orientation(mesh, step.positions);
      step.max_displacement = 0.0;
      for (std::size_t i = 0; i < step.positions.size(); ++i) {
        step.max_displacement =
            std::max(step.max_displacement, distance(step.positions[i], mesh.vertices()[i]));
      }
    }
    mesh.set_positions(std::move(step.positions));
    ++result.iterations_run;
    result.max_displacement_last = step.max_displacement;
    if (step.max_displacement <= tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace trismooth
