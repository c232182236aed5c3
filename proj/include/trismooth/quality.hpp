#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "trismooth/mesh.hpp"

namespace trismooth {

/// Lee-Lo distortion metric of triangle (a, b, c):
///
///   alpha = 2 sqrt(3) |CA x CB| / (|CA|^2 + |AB|^2 + |BC|^2)
///
/// 1 for an equilateral triangle, 0 when the corners are collinear. Throws
/// std::domain_error when all three points coincide.
double distortion_alpha(const Vertex& a, const Vertex& b, const Vertex& c);

struct QualityBin {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = 0;
  double percentage = 0.0;
};

struct QualityReport {
  std::vector<double> alphas;
  std::vector<QualityBin> bins;
  double average = 0.0;
};

/// 0.0, 0.2, 0.4, 0.6, 0.8, 1.0
std::vector<double> default_bin_edges();

/// Bins are left-closed and right-open except the last, which is closed.
/// Edges must be strictly increasing and span [0, 1].
QualityReport quality_report(std::span<const double> alphas, std::span<const double> bin_edges);
QualityReport quality_report(const Mesh& mesh, std::span<const double> bin_edges);
QualityReport quality_report(const Mesh& mesh);

struct ScatterPoint {
  double area = 0.0;
  double perimeter = 0.0;
};

/// One (unsigned area, edge-length sum) point per triangle.
std::vector<ScatterPoint> scatter_data(const Mesh& mesh);

/// Mean of the coefficients of variation (population standard deviation over
/// mean) of area and perimeter. Lower means a more uniform element set.
double evenness(std::span<const ScatterPoint> points);

}  // namespace trismooth
