"""Planar triangle mesh smoothing and edge swapping."""

from ._core import (
    Mesh,
    MeshError,
    PipelineReport,
    QualityBin,
    QualityReport,
    SmoothResult,
    SwapReport,
    delaunay,
    distortion_alpha,
    evenness,
    from_json,
    optimize,
    quality_report,
    random_points,
    scatter_data,
    smooth,
    structured_grid,
    swap_pass,
    to_json,
)

__version__ = "0.1.0"

__all__ = [
    "Mesh",
    "MeshError",
    "PipelineReport",
    "QualityBin",
    "QualityReport",
    "SmoothResult",
    "SwapReport",
    "delaunay",
    "distortion_alpha",
    "evenness",
    "from_json",
    "optimize",
    "quality_report",
    "random_points",
    "scatter_data",
    "smooth",
    "structured_grid",
    "swap_pass",
    "to_json",
]
