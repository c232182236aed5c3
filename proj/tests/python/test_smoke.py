import json
import math

import pytest

import trismooth as ts


def test_alpha_extremes():
    assert ts.distortion_alpha((0, 0), (1, 0), (0.5, math.sqrt(3) / 2)) == pytest.approx(1.0, abs=1e-12)
    assert ts.distortion_alpha((0, 0), (1, 0), (2, 0)) == pytest.approx(0.0, abs=1e-12)


def test_mesh_roundtrip_and_boundary():
    m = ts.Mesh([(0, 0), (1, 0), (1, 1), (0, 1)], [(0, 1, 2), (0, 2, 3)])
    assert m.vertex_count == 4
    assert m.triangle_count == 2
    assert all(m.is_boundary(v) for v in range(4))
    doc = ts.to_json(m)
    assert ts.to_json(ts.from_json(doc)) == doc
    assert json.loads(doc)["version"] == 1


def test_invalid_mesh_raises():
    with pytest.raises(ValueError):
        ts.Mesh([(0, 0), (1, 0), (0, 1)], [(0, 1, 7)])


def test_smooth_moves_centre_only():
    m = ts.Mesh([(0, 0), (1, 0), (1, 1), (0, 1), (0.9, 0.1)], [(0, 1, 4), (1, 2, 4), (2, 3, 4), (3, 0, 4)])
    r = ts.smooth(m, method="laplacian")
    assert r.converged
    assert m.vertices[4] == pytest.approx([0.5, 0.5])
    assert m.vertices[:4] == [[0, 0], [1, 0], [1, 1], [0, 1]]


def test_swap_thin_pair():
    m = ts.Mesh([(0, 0), (2, 0), (1, 0.2), (1, -0.2)], [(0, 1, 2), (1, 0, 3)])
    r = ts.swap_pass(m)
    assert r.flips == 1
    assert r.locally_optimal


def test_optimize_report():
    m = ts.structured_grid(nx=8, ny=8, jitter=0.3, seed=1)
    report = ts.optimize(m, method="lw-mdm")
    assert report.after.average >= report.before.average
    assert len(report.smooth_results) == 1
    assert sum(b.percentage for b in report.after.bins) == pytest.approx(100.0, abs=0.01)


def test_delaunay_counts():
    pts = ts.random_points(30, 4)
    m = ts.delaunay(pts, seed=4)
    assert m.vertex_count == 30
    assert all(m.signed_area(t) > 0 for t in range(m.triangle_count))
    assert len(ts.scatter_data(m)) == m.triangle_count
    assert ts.evenness(m) > 0
