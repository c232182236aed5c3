// trismooth command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 invalid or malformed mesh,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "trismooth/generators.hpp"
#include "trismooth/io.hpp"
#include "trismooth/pipeline.hpp"

namespace ts = trismooth;
namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kBadMesh = 2, kInternal = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string out;
  std::string format;

  std::string method = "mdm";
  std::optional<double> tol;
  int max_iters = 100;
  bool safe = false;

  int max_passes = 50;
  bool no_swap = false;
  int rounds = 1;

  int nx = 8, ny = 8;
  double width = 1.0, height = 1.0;
  std::string pattern = "diagonal";
  double jitter = 0.0;
  std::size_t points = 50;
  std::uint64_t seed = 0;

  std::string report = "json";
  std::string bins;
  std::string svg;
};

ts::io::MeshFormat mesh_format(const Options& o, const std::string& path) {
  if (!o.format.empty()) return ts::io::parse_mesh_format(o.format);
  const auto ext = fs::path(path).extension();
  if (ext == ".node" || ext == ".ele") return ts::io::MeshFormat::node_ele;
  return ts::io::MeshFormat::json;
}

ts::Mesh load(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  return ts::io::read_mesh(o.in, mesh_format(o, o.in));
}

void store(const Options& o, const ts::Mesh& mesh) {
  if (o.out.empty()) {
    if (mesh_format(o, "") == ts::io::MeshFormat::node_ele) throw UsageError("node-ele output needs --out");
    std::cout << ts::io::serialize_mesh_json(mesh);
    return;
  }
  ts::io::write_mesh(o.out, mesh, mesh_format(o, o.out));
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    ts::io::write_file(path, text);
  }
}

ts::SmoothConfig smooth_config(const Options& o) {
  ts::SmoothConfig c;
  c.method = ts::parse_smooth_method(o.method);
  c.tolerance = o.tol;
  c.max_iters = o.max_iters;
  c.safe_mode = o.safe;
  return c;
}

std::vector<double> bin_edges(const Options& o) {
  if (o.bins.empty()) return ts::default_bin_edges();
  std::vector<double> edges;
  std::stringstream ss(o.bins);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      edges.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse bin edge '" + item + "'");
    }
  }
  return edges;
}

/// Post-conditions every mutating command must keep.
void check_invariants(const ts::Mesh& before, const ts::Mesh& after) {
  if (after.vertex_count() != before.vertex_count() || after.triangle_count() != before.triangle_count()) {
    throw InvariantError("vertex or triangle count changed");
  }
  for (std::size_t i = 0; i < before.vertex_count(); ++i) {
    if (before.is_boundary(static_cast<ts::Index>(i)) && after.vertices()[i] != before.vertices()[i]) {
      throw InvariantError("boundary vertex " + std::to_string(i) + " moved");
    }
  }
}

std::string smooth_summary(const ts::SmoothResult& r) {
  std::ostringstream s;
  s.precision(17);
  s << "{\"iterations_run\": " << r.iterations_run << ", \"converged\": " << (r.converged ? "true" : "false")
    << ", \"max_displacement_last\": " << r.max_displacement_last << "}\n";
  return s.str();
}

void add_mesh_io(CLI::App* cmd, Options& o, bool input, bool output) {
  if (input) cmd->add_option("--in", o.in, "Input mesh file (json, or .node/.ele)");
  if (output) cmd->add_option("--out", o.out, "Output mesh file (stdout as json if omitted)");
  cmd->add_option("--format", o.format, "Mesh format: json | node-ele (default: from extension)");
}

void add_smooth_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "laplacian | mdm | lw-mdm")->capture_default_str();
  cmd->add_option("--tol", o.tol, "Convergence tolerance (default 1e-6 x bbox diagonal)");
  cmd->add_option("--max-iters", o.max_iters, "Iteration cap")->capture_default_str();
  cmd->add_flag("--safe", o.safe, "Reject moves that invert a triangle");
}

int run(int argc, char** argv) {
  CLI::App app{"Planar triangle mesh smoothing and edge swapping"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Create a fixture mesh");
  generate->require_subcommand(1);
  auto* grid = generate->add_subcommand("grid", "Structured grid triangulation");
  add_mesh_io(grid, o, false, true);
  grid->add_option("--nx", o.nx)->capture_default_str();
  grid->add_option("--ny", o.ny)->capture_default_str();
  grid->add_option("--width", o.width)->capture_default_str();
  grid->add_option("--height", o.height)->capture_default_str();
  grid->add_option("--pattern", o.pattern, "diagonal | union-jack")->capture_default_str();
  grid->add_option("--jitter", o.jitter, "Interior jitter as a fraction of the cell size")->capture_default_str();
  grid->add_option("--seed", o.seed)->capture_default_str();
  auto* del = generate->add_subcommand("delaunay", "Delaunay triangulation of random points");
  add_mesh_io(del, o, false, true);
  del->add_option("--points", o.points, "Number of random points in [0,width]x[0,height]")->capture_default_str();
  del->add_option("--width", o.width)->capture_default_str();
  del->add_option("--height", o.height)->capture_default_str();
  del->add_option("--seed", o.seed, "Seed for the points and the insertion order")->capture_default_str();

  auto* smooth = app.add_subcommand("smooth", "Relocate interior nodes");
  add_mesh_io(smooth, o, true, true);
  add_smooth_flags(smooth, o);

  auto* swap = app.add_subcommand("swap", "Min-angle edge swapping to local optimality");
  add_mesh_io(swap, o, true, true);
  swap->add_option("--max-passes", o.max_passes)->capture_default_str();

  auto* optimize = app.add_subcommand("optimize", "Smoothing followed by edge swapping");
  add_mesh_io(optimize, o, true, true);
  add_smooth_flags(optimize, o);
  optimize->add_option("--max-passes", o.max_passes)->capture_default_str();
  optimize->add_flag("--no-swap", o.no_swap, "Skip edge swapping");
  optimize->add_option("--rounds", o.rounds, "Smooth+swap rounds")->capture_default_str();
  optimize->add_option("--report", o.report, "Report format written to stdout: json | csv")->capture_default_str();

  auto* quality = app.add_subcommand("quality", "Element quality histogram");
  add_mesh_io(quality, o, true, false);
  quality->add_option("--report", o.report, "json | csv")->capture_default_str();
  quality->add_option("--bins", o.bins, "Comma-separated bin edges spanning [0,1]");

  auto* scatter = app.add_subcommand("scatter", "Per-triangle (area, perimeter) data");
  add_mesh_io(scatter, o, true, false);
  scatter->add_option("--out", o.out, "CSV output (stdout if omitted)");
  scatter->add_option("--svg", o.svg, "Also write an SVG scatter plot here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (grid->parsed()) {
    ts::GridSpec spec;
    spec.nx = o.nx;
    spec.ny = o.ny;
    spec.width = o.width;
    spec.height = o.height;
    spec.pattern = ts::parse_grid_pattern(o.pattern);
    spec.jitter = o.jitter;
    spec.seed = o.seed;
    store(o, ts::structured_grid(spec));
  } else if (del->parsed()) {
    store(o, ts::delaunay(ts::random_points(o.points, o.seed, o.width, o.height), o.seed));
  } else if (smooth->parsed()) {
    ts::Mesh mesh = load(o);
    const ts::Mesh before = mesh;
    const auto result = ts::smooth(mesh, smooth_config(o));
    check_invariants(before, mesh);
    if (o.out.empty()) throw UsageError("smooth needs --out");
    store(o, mesh);
    std::cout << smooth_summary(result);
  } else if (swap->parsed()) {
    ts::Mesh mesh = load(o);
    const ts::Mesh before = mesh;
    const auto r = ts::swap_pass(mesh, o.max_passes);
    check_invariants(before, mesh);
    if (o.out.empty()) throw UsageError("swap needs --out");
    store(o, mesh);
    std::cout << "{\"passes\": " << r.passes << ", \"flips\": " << r.flips
              << ", \"locally_optimal\": " << (r.locally_optimal ? "true" : "false") << "}\n";
  } else if (optimize->parsed()) {
    ts::Mesh mesh = load(o);
    const ts::Mesh before = mesh;
    ts::PipelineConfig cfg;
    cfg.smooth = smooth_config(o);
    cfg.swap_enabled = !o.no_swap;
    cfg.max_passes = o.max_passes;
    cfg.rounds = o.rounds;
    const auto format = ts::io::parse_report_format(o.report);
    const auto report = ts::optimize(mesh, cfg);
    check_invariants(before, mesh);
    if (!o.out.empty()) store(o, mesh);
    std::cout << ts::io::emit_report(report, format);
  } else if (quality->parsed()) {
    const ts::Mesh mesh = load(o);
    const auto format = ts::io::parse_report_format(o.report);
    const auto edges = bin_edges(o);
    std::cout << ts::io::emit_report(ts::quality_report(mesh, edges), format);
  } else if (scatter->parsed()) {
    const ts::Mesh mesh = load(o);
    const auto pts = ts::scatter_data(mesh);
    emit(ts::io::emit_scatter(pts, ts::io::ScatterFormat::csv), o.out);
    if (!o.svg.empty()) ts::io::write_file(o.svg, ts::io::emit_scatter(pts, ts::io::ScatterFormat::svg));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ts::MeshError& e) {
    std::cerr << "invalid mesh: " << e.what() << '\n';
    return kBadMesh;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::runtime_error& e) {
    // unreadable or unwritable files
    std::cerr << "error: " << e.what() << '\n';
    return kBadMesh;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
