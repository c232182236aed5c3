#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "trismooth/mesh.hpp"
#include "trismooth/pipeline.hpp"
#include "trismooth/quality.hpp"

namespace trismooth::io {

/// Malformed input. `line` is 1-based, 0 when no single line is to blame.
class ParseError : public MeshError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class MeshFormat { json, node_ele };
enum class ReportFormat { json, csv };
enum class ScatterFormat { csv, svg };

MeshFormat parse_mesh_format(std::string_view name);
ReportFormat parse_report_format(std::string_view name);

inline constexpr int kMeshDocumentVersion = 1;

/// {"version": 1, "vertices": [[x, y], ...], "triangles": [[i, j, k], ...],
///  "boundary": [v, ...]}, 0-based. "boundary" is optional on input; when
/// present it must agree with the connectivity.
Mesh parse_mesh_json(std::string_view text, const std::string& source = "<json>");
std::string serialize_mesh_json(const Mesh& mesh);

/// Triangle-style .node/.ele pair. Indices may start at 0 or 1; the base is
/// taken from the first node and applies to the element references too.
Mesh parse_node_ele(std::string_view node_text, std::string_view ele_text,
                    const std::string& node_source = "<node>", const std::string& ele_source = "<ele>");
/// Returns (.node text, .ele text), 1-based.
std::pair<std::string, std::string> serialize_node_ele(const Mesh& mesh);

/// For node-ele, `path` may name the .node file, the .ele file or the common
/// stem.
Mesh read_mesh(const std::filesystem::path& path, MeshFormat format);
void write_mesh(const std::filesystem::path& path, const Mesh& mesh, MeshFormat format);

/// csv: "lower,upper,count,percentage" rows for every bin (percentages to 2
/// decimals), then "average,<4 decimals>". json mirrors the struct at full
/// precision.
std::string emit_report(const QualityReport& report, ReportFormat format);
/// csv rows carry a leading stage column ("before" / "after").
std::string emit_report(const PipelineReport& report, ReportFormat format);

/// csv: "area,perimeter" then one row per point; svg: one circle per point on
/// linear axes spanning the data.
std::string emit_scatter(std::span<const ScatterPoint> points, ScatterFormat format);

/// Fixed 6 decimals with trailing zeros trimmed, keeping one digit after the
/// point: 0.8 -> "0.8", 1 -> "1.0", 3.41421356 -> "3.414214".
std::string format_decimal(double value);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace trismooth::io
