#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trismooth/mesh.hpp"

namespace trismooth {

enum class SmoothMethod { laplacian, mdm, lw_mdm };

std::string_view to_string(SmoothMethod m);
/// Accepts "laplacian", "mdm" and "lw-mdm".
SmoothMethod parse_smooth_method(std::string_view name);

struct SmoothConfig {
  SmoothMethod method = SmoothMethod::mdm;
  /// Largest per-step displacement that still counts as "not moved". Unset
  /// means 1e-6 times the mesh bounding-box diagonal.
  std::optional<double> tolerance;
  int max_iters = 100;
  /// Discard any vertex move that would make a positively oriented triangle
  /// non-positive.
  bool safe_mode = false;
};

struct SmoothResult {
  int iterations_run = 0;
  bool converged = false;
  double max_displacement_last = 0.0;
};

struct StepResult {
  std::vector<Vertex> positions;
  double max_displacement = 0.0;
};

/// Third corner of the equilateral triangle on edge (q, r), on the left of
/// q -> r. For a counter-clockwise triangle (a, q, r) that is a's side.
Vertex equilateral_apex(const Vertex& q, const Vertex& r);

/// Per-edge weights l_i / sum(l). Throws std::invalid_argument if the list is
/// empty or every length is zero.
std::vector<double> lw_weights(std::span<const double> opposite_edge_lengths);

/// Weights for the opposite edges of a fan, in fan order.
std::vector<double> lw_weights(const Mesh& mesh, std::span<const FanEntry> fan);

// One Jacobi step each: all reads come from the current positions, boundary
// vertices are copied through untouched.
StepResult laplacian_step(const Mesh& mesh);
StepResult mdm_step(const Mesh& mesh);
StepResult lw_mdm_step(const Mesh& mesh);

StepResult smoothing_step(const Mesh& mesh, SmoothMethod method);

/// Iterates the chosen step until the largest displacement drops to the
/// tolerance or max_iters steps have run. Mutates the mesh positions.
SmoothResult smooth(Mesh& mesh, const SmoothConfig& config);

}  // namespace trismooth
