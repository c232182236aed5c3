#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "trismooth/generators.hpp"
#include "trismooth/io.hpp"
#include "trismooth/pipeline.hpp"

namespace py = pybind11;
namespace ts = trismooth;

namespace {

ts::Mesh make_mesh(const std::vector<std::array<double, 2>>& vertices,
                   const std::vector<std::array<ts::Index, 3>>& triangles) {
  std::vector<ts::Vertex> v;
  v.reserve(vertices.size());
  for (const auto& p : vertices) v.push_back({p[0], p[1]});
  return ts::Mesh::build(std::move(v), triangles);
}

std::vector<std::array<double, 2>> vertex_list(const ts::Mesh& m) {
  std::vector<std::array<double, 2>> out;
  out.reserve(m.vertex_count());
  for (const auto& p : m.vertices()) out.push_back({p.x, p.y});
  return out;
}

std::vector<std::array<ts::Index, 3>> triangle_list(const ts::Mesh& m) {
  std::vector<std::array<ts::Index, 3>> out;
  out.reserve(m.triangle_count());
  for (const auto& t : m.triangles()) out.push_back(t.as_array());
  return out;
}

ts::SmoothConfig smooth_config(const std::string& method, std::optional<double> tol, int max_iters, bool safe) {
  ts::SmoothConfig c;
  c.method = ts::parse_smooth_method(method);
  c.tolerance = tol;
  c.max_iters = max_iters;
  c.safe_mode = safe;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Planar triangle mesh smoothing and edge swapping";

  py::register_exception<ts::MeshError>(m, "MeshError", PyExc_ValueError);

  py::class_<ts::Mesh>(m, "Mesh")
      .def(py::init(&make_mesh), py::arg("vertices"), py::arg("triangles"))
      .def_property_readonly("vertices", &vertex_list)
      .def_property_readonly("triangles", &triangle_list)
      .def_property_readonly("vertex_count", &ts::Mesh::vertex_count)
      .def_property_readonly("triangle_count", &ts::Mesh::triangle_count)
      .def("is_boundary", &ts::Mesh::is_boundary, py::arg("v"))
      .def("signed_area", py::overload_cast<ts::Index>(&ts::Mesh::signed_area, py::const_), py::arg("t"))
      .def("copy", [](const ts::Mesh& self) { return ts::Mesh(self); })
      .def("__repr__", [](const ts::Mesh& self) {
        return "<trismooth.Mesh " + std::to_string(self.vertex_count()) + " vertices, " +
               std::to_string(self.triangle_count()) + " triangles>";
      });

  py::class_<ts::QualityBin>(m, "QualityBin")
      .def_readonly("lower", &ts::QualityBin::lower)
      .def_readonly("upper", &ts::QualityBin::upper)
      .def_readonly("count", &ts::QualityBin::count)
      .def_readonly("percentage", &ts::QualityBin::percentage);

  py::class_<ts::QualityReport>(m, "QualityReport")
      .def_readonly("alphas", &ts::QualityReport::alphas)
      .def_readonly("bins", &ts::QualityReport::bins)
      .def_readonly("average", &ts::QualityReport::average);

  py::class_<ts::SmoothResult>(m, "SmoothResult")
      .def_readonly("iterations_run", &ts::SmoothResult::iterations_run)
      .def_readonly("converged", &ts::SmoothResult::converged)
      .def_readonly("max_displacement_last", &ts::SmoothResult::max_displacement_last);

  py::class_<ts::SwapReport>(m, "SwapReport")
      .def_readonly("passes", &ts::SwapReport::passes)
      .def_readonly("flips", &ts::SwapReport::flips)
      .def_readonly("locally_optimal", &ts::SwapReport::locally_optimal);

  py::class_<ts::PipelineReport>(m, "PipelineReport")
      .def_readonly("before", &ts::PipelineReport::before)
      .def_readonly("after", &ts::PipelineReport::after)
      .def_readonly("smooth_results", &ts::PipelineReport::smooth_results)
      .def_readonly("swap_reports", &ts::PipelineReport::swap_reports);

  m.def("distortion_alpha",
        [](std::array<double, 2> a, std::array<double, 2> b, std::array<double, 2> c) {
          return ts::distortion_alpha({a[0], a[1]}, {b[0], b[1]}, {c[0], c[1]});
        },
        py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("quality_report",
        [](const ts::Mesh& mesh, std::optional<std::vector<double>> bins) {
          return ts::quality_report(mesh, bins ? *bins : ts::default_bin_edges());
        },
        py::arg("mesh"), py::arg("bins") = py::none());

  m.def("scatter_data",
        [](const ts::Mesh& mesh) {
          std::vector<std::pair<double, double>> out;
          for (const auto& p : ts::scatter_data(mesh)) out.emplace_back(p.area, p.perimeter);
          return out;
        },
        py::arg("mesh"));

  m.def("evenness", [](const ts::Mesh& mesh) { return ts::evenness(ts::scatter_data(mesh)); }, py::arg("mesh"));

  m.def("smooth",
        [](ts::Mesh& mesh, const std::string& method, std::optional<double> tol, int max_iters, bool safe) {
          return ts::smooth(mesh, smooth_config(method, tol, max_iters, safe));
        },
        py::arg("mesh"), py::arg("method") = "mdm", py::arg("tol") = py::none(), py::arg("max_iters") = 100,
        py::arg("safe") = false);

  m.def("swap_pass", &ts::swap_pass, py::arg("mesh"), py::arg("max_passes") = 50);

  m.def("optimize",
        [](ts::Mesh& mesh, const std::string& method, bool swap, int rounds, std::optional<double> tol,
           int max_iters, bool safe, int max_passes) {
          ts::PipelineConfig cfg;
          cfg.smooth = smooth_config(method, tol, max_iters, safe);
          cfg.swap_enabled = swap;
          cfg.rounds = rounds;
          cfg.max_passes = max_passes;
          return ts::optimize(mesh, cfg);
        },
        py::arg("mesh"), py::arg("method") = "mdm", py::arg("swap") = true, py::arg("rounds") = 1,
        py::arg("tol") = py::none(), py::arg("max_iters") = 100, py::arg("safe") = false,
        py::arg("max_passes") = 50);

  m.def("structured_grid",
        [](int nx, int ny, double width, double height, const std::string& pattern, double jitter,
           std::uint64_t seed) {
          ts::GridSpec g;
          g.nx = nx;
          g.ny = ny;
          g.width = width;
          g.height = height;
          g.pattern = ts::parse_grid_pattern(pattern);
          g.jitter = jitter;
          g.seed = seed;
          return ts::structured_grid(g);
        },
        py::arg("nx") = 8, py::arg("ny") = 8, py::arg("width") = 1.0, py::arg("height") = 1.0,
        py::arg("pattern") = "diagonal", py::arg("jitter") = 0.0, py::arg("seed") = 0);

  m.def("delaunay",
        [](const std::vector<std::array<double, 2>>& points, std::uint64_t seed) {
          std::vector<ts::Vertex> v;
          for (const auto& p : points) v.push_back({p[0], p[1]});
          return ts::delaunay(v, seed);
        },
        py::arg("points"), py::arg("seed") = 0);

  m.def("random_points",
        [](std::size_t n, std::uint64_t seed, double width, double height) {
          std::vector<std::array<double, 2>> out;
          for (const auto& p : ts::random_points(n, seed, width, height)) out.push_back({p.x, p.y});
          return out;
        },
        py::arg("n"), py::arg("seed"), py::arg("width") = 1.0, py::arg("height") = 1.0);

  m.def("to_json", &ts::io::serialize_mesh_json, py::arg("mesh"));
  m.def("from_json", [](const std::string& text) { return ts::io::parse_mesh_json(text); }, py::arg("text"));
}
