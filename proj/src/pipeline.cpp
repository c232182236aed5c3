#include "trismooth/pipeline.hpp"

#include <stdexcept>

namespace trismooth {

PipelineReport optimize(Mesh& mesh, const PipelineConfig& config) {
  if (config.rounds < 1) throw std::invalid_argument("pipeline needs at least one round");

  PipelineReport report;
  report.before = quality_report(mesh);
  for (int round = 0; round < config.rounds; ++round) {
    report.smooth_results.push_back(smooth(mesh, config.smooth));
    report.swap_reports.push_back(config.swap_enabled ? swap_pass(mesh, config.max_passes) : SwapReport{});
  }
  report.after = quality_report(mesh);
  return report;
}

}  // namespace trismooth
