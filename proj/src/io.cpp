#include "trismooth/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace trismooth::io {

using ordered_json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : MeshError(line > 0 ? source + ":" + std::to_string(line) + ": " + what : source + ": " + what),
      line_(line) {}

MeshFormat parse_mesh_format(std::string_view name) {
  if (name == "json") return MeshFormat::json;
  if (name == "node-ele" || name == "node_ele" || name == "node") return MeshFormat::node_ele;
  throw std::invalid_argument("unknown mesh format '" + std::string(name) + "'");
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  const auto dot = s.find('.');
  auto end = s.find_last_not_of('0');
  if (end == dot) ++end;
  s.erase(end + 1);
  return s;
}

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string full_precision(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// ---- json mesh ----

Index json_index(const ordered_json& value, const std::string& source, const char* what) {
  if (!value.is_number_integer()) throw ParseError(source, 0, std::string(what) + " must be an integer");
  return value.get<Index>();
}

}  // namespace

Mesh parse_mesh_json(std::string_view text, const std::string& source) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source, 0, e.what());
  }
  if (!doc.is_object()) throw ParseError(source, 0, "mesh document must be a json object");
  const int version = doc.value("version", kMeshDocumentVersion);
  if (version != kMeshDocumentVersion) {
    throw ParseError(source, 0, "unsupported mesh document version " + std::to_string(version));
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError(source, 0, "missing \"vertices\" array");
  }
  if (!doc.contains("triangles") || !doc["triangles"].is_array()) {
    throw ParseError(source, 0, "missing \"triangles\" array");
  }

  std::vector<Vertex> verts;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ParseError(source, 0, "vertex " + std::to_string(verts.size()) + " must be [x, y]");
    }
    verts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  std::vector<Triangle> tris;
  for (const auto& t : doc["triangles"]) {
    if (!t.is_array() || t.size() != 3) {
      throw ParseError(source, 0, "triangle " + std::to_string(tris.size()) + " must be [i, j, k]");
    }
    tris.push_back({json_index(t[0], source, "triangle index"), json_index(t[1], source, "triangle index"),
                    json_index(t[2], source, "triangle index")});
  }

  Mesh mesh;
  try {
    mesh = Mesh::build(std::move(verts), tris);
  } catch (const MeshError& e) {
    throw ParseError(source, 0, e.what());
  }

  if (doc.contains("boundary")) {
    std::vector<Index> listed;
    for (const auto& b : doc["boundary"]) listed.push_back(json_index(b, source, "boundary index"));
    std::sort(listed.begin(), listed.end());
    std::vector<Index> computed;
    for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
      if (mesh.is_boundary(static_cast<Index>(i))) computed.push_back(static_cast<Index>(i));
    }
    if (listed != computed) throw ParseError(source, 0, "\"boundary\" does not match the connectivity");
  }
  return mesh;
}

std::string serialize_mesh_json(const Mesh& mesh) {
  ordered_json doc;
  doc["version"] = kMeshDocumentVersion;
  auto verts = ordered_json::array();
  for (const auto& v : mesh.vertices()) verts.push_back({v.x, v.y});
  doc["vertices"] = std::move(verts);
  auto tris = ordered_json::array();
  for (const auto& t : mesh.triangles()) tris.push_back({t.a, t.b, t.c});
  doc["triangles"] = std::move(tris);
  auto boundary = ordered_json::array();
  for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
    if (mesh.is_boundary(static_cast<Index>(i))) boundary.push_back(i);
  }
  doc["boundary"] = std::move(boundary);
  return doc.dump(1) + "\n";
}

// ---- node / ele ----

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line out{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) out.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
  }
  return lines;
}

template <typename T>
T number(std::string_view tok, const std::string& source, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(source, line, "cannot read number '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Mesh parse_node_ele(std::string_view node_text, std::string_view ele_text, const std::string& node_source,
                    const std::string& ele_source) {
  const auto node_lines = tokenize(node_text);
  if (node_lines.empty()) throw ParseError(node_source, 0, "empty node file");
  const auto& nh = node_lines.front();
  if (nh.tokens.size() < 2) throw ParseError(node_source, nh.number, "malformed header");
  const auto n_nodes = number<long>(nh.tokens[0], node_source, nh.number);
  const auto dim = number<int>(nh.tokens[1], node_source, nh.number);
  if (n_nodes < 3) throw ParseError(node_source, nh.number, "need at least three vertices");
  if (dim != 2) throw ParseError(node_source, nh.number, "only 2-dimensional nodes are supported");
  if (node_lines.size() != static_cast<std::size_t>(n_nodes) + 1) {
    throw ParseError(node_source, nh.number,
                     "header declares " + std::to_string(n_nodes) + " vertices but the file lists " +
                         std::to_string(node_lines.size() - 1));
  }

  long base = 0;
  std::vector<Vertex> verts;
  verts.reserve(static_cast<std::size_t>(n_nodes));
  for (std::size_t i = 1; i < node_lines.size(); ++i) {
    const auto& ln = node_lines[i];
    if (ln.tokens.size() < 3) throw ParseError(node_source, ln.number, "expected 'index x y'");
    const auto idx = number<long>(ln.tokens[0], node_source, ln.number);
    if (i == 1) {
      if (idx != 0 && idx != 1) throw ParseError(node_source, ln.number, "first vertex index must be 0 or 1");
      base = idx;
    }
    if (idx != base + static_cast<long>(i) - 1) {
      throw ParseError(node_source, ln.number, "vertex indices must be consecutive");
    }
    verts.push_back({number<double>(ln.tokens[1], node_source, ln.number),
                     number<double>(ln.tokens[2], node_source, ln.number)});
  }

  const auto ele_lines = tokenize(ele_text);
  if (ele_lines.empty()) throw ParseError(ele_source, 0, "empty element file");
  const auto& eh = ele_lines.front();
  if (eh.tokens.size() < 2) throw ParseError(ele_source, eh.number, "malformed header");
  const auto n_tris = number<long>(eh.tokens[0], ele_source, eh.number);
  const auto per = number<int>(eh.tokens[1], ele_source, eh.number);
  if (n_tris < 0) throw ParseError(ele_source, eh.number, "negative triangle count");
  if (per != 3) throw ParseError(ele_source, eh.number, "only 3-node triangles are supported");
  if (ele_lines.size() != static_cast<std::size_t>(n_tris) + 1) {
    throw ParseError(ele_source, eh.number,
                     "header declares " + std::to_string(n_tris) + " triangles but the file lists " +
                         std::to_string(ele_lines.size() - 1));
  }

  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(n_tris));
  for (std::size_t i = 1; i < ele_lines.size(); ++i) {
    const auto& ln = ele_lines[i];
    if (ln.tokens.size() < 4) throw ParseError(ele_source, ln.number, "expected 'index a b c'");
    std::array<Index, 3> corners{};
    for (int k = 0; k < 3; ++k) {
      const auto ref = number<long>(ln.tokens[static_cast<std::size_t>(k) + 1], ele_source, ln.number);
      if (ref < base || ref >= base + n_nodes) {
        throw ParseError(ele_source, ln.number,
                         "triangle references vertex " + std::to_string(ref) + " of " + std::to_string(n_nodes));
      }
      corners[static_cast<std::size_t>(k)] = static_cast<Index>(ref - base);
    }
    if (corners[0] == corners[1] || corners[1] == corners[2] || corners[0] == corners[2]) {
      throw ParseError(ele_source, ln.number, "triangle repeats a vertex");
    }
    tris.push_back({corners[0], corners[1], corners[2]});
  }

  try {
    return Mesh::build(std::move(verts), tris);
  } catch (const MeshError& e) {
    throw ParseError(ele_source, 0, e.what());
  }
}

std::pair<std::string, std::string> serialize_node_ele(const Mesh& mesh) {
  std::ostringstream node, ele;
  node << mesh.vertex_count() << " 2 0 0\n";
  for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
    const auto& v = mesh.vertices()[i];
    node << i + 1 << ' ' << full_precision(v.x) << ' ' << full_precision(v.y) << '\n';
  }
  ele << mesh.triangle_count() << " 3 0\n";
  for (std::size_t i = 0; i < mesh.triangle_count(); ++i) {
    const auto& t = mesh.triangles()[i];
    ele << i + 1 << ' ' << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n';
  }
  return {node.str(), ele.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << contents;
}

namespace {

std::filesystem::path with_suffix(std::filesystem::path path, const char* suffix) {
  const auto ext = path.extension();
  if (ext == ".node" || ext == ".ele") path.replace_extension();
  path += suffix;
  return path;
}

}  // namespace

Mesh read_mesh(const std::filesystem::path& path, MeshFormat format) {
  if (format == MeshFormat::json) return parse_mesh_json(read_file(path), path.string());
  const auto node = with_suffix(path, ".node"), ele = with_suffix(path, ".ele");
  return parse_node_ele(read_file(node), read_file(ele), node.string(), ele.string());
}

void write_mesh(const std::filesystem::path& path, const Mesh& mesh, MeshFormat format) {
  if (format == MeshFormat::json) {
    write_file(path, serialize_mesh_json(mesh));
    return;
  }
  const auto [node, ele] = serialize_node_ele(mesh);
  write_file(with_suffix(path, ".node"), node);
  write_file(with_suffix(path, ".ele"), ele);
}

// ---- reports ----

namespace {

ordered_json quality_json(const QualityReport& r) {
  ordered_json j;
  j["triangle_count"] = r.alphas.size();
  j["average"] = r.average;
  auto bins = ordered_json::array();
  for (const auto& b : r.bins) {
    bins.push_back({{"lower", b.lower}, {"upper", b.upper}, {"count", b.count}, {"percentage", b.percentage}});
  }
  j["bins"] = std::move(bins);
  j["alphas"] = r.alphas;
  return j;
}

void quality_csv_rows(std::ostringstream& out, const QualityReport& r, const std::string& prefix) {
  for (const auto& b : r.bins) {
    out << prefix << format_decimal(b.lower) << ',' << format_decimal(b.upper) << ',' << b.count << ','
        << fixed(b.percentage, 2) << '\n';
  }
  out << prefix << "average," << fixed(r.average, 4) << '\n';
}

}  // namespace

std::string emit_report(const QualityReport& report, ReportFormat format) {
  if (format == ReportFormat::json) return quality_json(report).dump(2) + "\n";
  std::ostringstream out;
  out << "lower,upper,count,percentage\n";
  quality_csv_rows(out, report, "");
  return out.str();
}

std::string emit_report(const PipelineReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["before"] = quality_json(report.before);
    j["after"] = quality_json(report.after);
    auto rounds = ordered_json::array();
    for (std::size_t i = 0; i < report.smooth_results.size(); ++i) {
      const auto& s = report.smooth_results[i];
      const auto& w = report.swap_reports[i];
      rounds.push_back({{"smooth",
                         {{"iterations_run", s.iterations_run},
                          {"converged", s.converged},
                          {"max_displacement_last", s.max_displacement_last}}},
                        {"swap", {{"passes", w.passes}, {"flips", w.flips}, {"locally_optimal", w.locally_optimal}}}});
    }
    j["rounds"] = std::move(rounds);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "stage,lower,upper,count,percentage\n";
  quality_csv_rows(out, report.before, "before,");
  quality_csv_rows(out, report.after, "after,");
  return out.str();
}

std::string emit_scatter(std::span<const ScatterPoint> points, ScatterFormat format) {
  std::ostringstream out;
  if (format == ScatterFormat::csv) {
    out << "area,perimeter\n";
    for (const auto& p : points) out << format_decimal(p.area) << ',' << format_decimal(p.perimeter) << '\n';
    return out.str();
  }

  constexpr double kWidth = 640, kHeight = 480, kMargin = 60;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!points.empty()) {
    const auto [xmin, xmax] = std::minmax_element(points.begin(), points.end(),
                                                  [](auto& a, auto& b) { return a.area < b.area; });
    const auto [ymin, ymax] = std::minmax_element(
        points.begin(), points.end(), [](auto& a, auto& b) { return a.perimeter < b.perimeter; });
    x0 = xmin->area;
    x1 = xmax->area;
    y0 = ymin->perimeter;
    y1 = ymax->perimeter;
  }
  // a single value would collapse the axis
  if (x1 - x0 <= 0) { x0 -= 0.5 * std::max(1e-12, std::abs(x0)); x1 += 0.5 * std::max(1e-12, std::abs(x1)); }
  if (y1 - y0 <= 0) { y0 -= 0.5 * std::max(1e-12, std::abs(y0)); y1 += 0.5 * std::max(1e-12, std::abs(y1)); }
  const double pw = kWidth - 2 * kMargin, ph = kHeight - 2 * kMargin;
  auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
      << kHeight - kMargin << "\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kHeight - kMargin
      << "\"/>\n</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">area</text>\n"
      << "<text x=\"15\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " << kHeight / 2
      << ")\">perimeter</text>\n"
      << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16 << "\">" << format_decimal(x0) << "</text>\n"
      << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16 << "\" text-anchor=\"end\">"
      << format_decimal(x1) << "</text>\n"
      << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin << "\" text-anchor=\"end\">"
      << format_decimal(y0) << "</text>\n"
      << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 4 << "\" text-anchor=\"end\">" << format_decimal(y1)
      << "</text>\n</g>\n";
  out << "<g fill=\"steelblue\" fill-opacity=\"0.7\">\n";
  for (const auto& p : points) {
    out << "<circle cx=\"" << fixed(sx(p.area), 2) << "\" cy=\"" << fixed(sy(p.perimeter), 2) << "\" r=\"3\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace trismooth::io
