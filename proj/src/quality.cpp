#include "trismooth/quality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace trismooth {

namespace {

double squared(double v) { return v * v; }

double dist2(const Vertex& p, const Vertex& q) { return squared(p.x - q.x) + squared(p.y - q.y); }

}  // namespace

double distortion_alpha(const Vertex& a, const Vertex& b, const Vertex& c) {
  const double cax = a.x - c.x, cay = a.y - c.y;
  const double cbx = b.x - c.x, cby = b.y - c.y;
  const double cross = std::abs(cax * cby - cay * cbx);
  const double denom = dist2(c, a) + dist2(a, b) + dist2(b, c);
  if (denom == 0.0) throw std::domain_error("distortion metric of three coincident points");
  return std::min(1.0, 2.0 * std::sqrt(3.0) * cross / denom);
}

std::vector<double> default_bin_edges() { return {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}; }

QualityReport quality_report(std::span<const double> alphas, std::span<const double> bin_edges) {
  if (alphas.empty()) throw std::invalid_argument("quality report of an empty mesh");
  if (bin_edges.size() < 2) throw std::invalid_argument("need at least two bin edges");
  for (std::size_t i = 1; i < bin_edges.size(); ++i) {
    if (!(bin_edges[i] > bin_edges[i - 1])) {
      throw std::invalid_argument("bin edges must be strictly increasing");
    }
  }
  if (bin_edges.front() > 0.0 || bin_edges.back() < 1.0) {
    throw std::invalid_argument("bin edges must span [0, 1]");
  }

  QualityReport report;
  report.alphas.assign(alphas.begin(), alphas.end());
  for (std::size_t i = 0; i + 1 < bin_edges.size(); ++i) {
    report.bins.push_back({bin_edges[i], bin_edges[i + 1], 0, 0.0});
  }
  const std::size_t last = report.bins.size() - 1;
  for (double a : alphas) {
    // upper_bound gives the first edge strictly above a: left-closed bins
    auto it = std::upper_bound(bin_edges.begin(), bin_edges.end(), a);
    auto bin = static_cast<std::size_t>(std::distance(bin_edges.begin(), it));
    bin = bin == 0 ? 0 : std::min(bin - 1, last);
    ++report.bins[bin].count;
  }
  const auto n = static_cast<double>(alphas.size());
  for (auto& b : report.bins) b.percentage = 100.0 * static_cast<double>(b.count) / n;
  report.average = std::accumulate(alphas.begin(), alphas.end(), 0.0) / n;
  return report;
}

QualityReport quality_report(const Mesh& mesh, std::span<const double> bin_edges) {
  std::vector<double> alphas;
  alphas.reserve(mesh.triangle_count());
  for (const auto& t : mesh.triangles()) {
    alphas.push_back(distortion_alpha(mesh.vertex(t.a), mesh.vertex(t.b), mesh.vertex(t.c)));
  }
  return quality_report(alphas, bin_edges);
}

QualityReport quality_report(const Mesh& mesh) {
  const auto edges = default_bin_edges();
  return quality_report(mesh, edges);
}

std::vector<ScatterPoint> scatter_data(const Mesh& mesh) {
  std::vector<ScatterPoint> out;
  out.reserve(mesh.triangle_count());
  for (const auto& t : mesh.triangles()) {
    const Vertex &a = mesh.vertex(t.a), &b = mesh.vertex(t.b), &c = mesh.vertex(t.c);
    out.push_back({std::abs(signed_area(a, b, c)),
                   std::sqrt(dist2(a, b)) + std::sqrt(dist2(b, c)) + std::sqrt(dist2(c, a))});
  }
  return out;
}

namespace {

double coefficient_of_variation(std::span<const ScatterPoint> points, double ScatterPoint::*field) {
  const auto n = static_cast<double>(points.size());
  double mean = 0.0;
  for (const auto& p : points) mean += p.*field;
  mean /= n;
  if (mean == 0.0) throw std::domain_error("evenness undefined for a zero mean");
  double var = 0.0;
  for (const auto& p : points) var += squared(p.*field - mean);
  return std::sqrt(var / n) / mean;
}

}  // namespace

double evenness(std::span<const ScatterPoint> points) {
  if (points.size() < 2) throw std::invalid_argument("evenness needs at least two points");
  return 0.5 * (coefficient_of_variation(points, &ScatterPoint::area) +
                coefficient_of_variation(points, &ScatterPoint::perimeter));
}

}  // namespace trismooth
