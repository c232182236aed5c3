#pragma once

#include <vector>

#include "trismooth/mesh.hpp"
#include "trismooth/quality.hpp"
#include "trismooth/smoothing.hpp"
#include "trismooth/swap.hpp"

namespace trismooth {

struct PipelineConfig {
  SmoothConfig smooth;
  bool swap_enabled = true;
  int max_passes = 50;
  int rounds = 1;
};

struct PipelineReport {
  QualityReport before;
  QualityReport after;
  std::vector<SmoothResult> smooth_results;
  /// Empty entries (all zero) when swapping is disabled.
  std::vector<SwapReport> swap_reports;
};

/// Smooth-then-swap, repeated `rounds` times, with quality snapshots over the
/// default bins before and after.
PipelineReport optimize(Mesh& mesh, const PipelineConfig& config);

}  // namespace trismooth
