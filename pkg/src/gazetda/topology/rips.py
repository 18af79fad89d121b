"""Vietoris-Rips persistence of planar point clouds (dimensions 0 and 1).

Diameter convention: a simplex enters the filtration at its diameter, so an
edge appears at the distance between its endpoints and a triangle at its
longest edge length. Vertices enter at 0. The filtration is truncated at
``max_scale``: simplices with larger diameter are never built, and dimension-1
classes still unpaired there are reported with death = inf.

The column order of the boundary-matrix reduction is (filtration value,
dimension, lexicographic vertex order).
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ..errors import ConfigError
from ..gaze.types import PointCloud
from .diagram import FiltrationKind, PersistenceDiagram, make_diagram
from .reduction import persistence_from_filtration


def vietoris_rips(
    cloud: PointCloud, max_dim: int = 1, max_scale: float = float("inf")
) -> list[PersistenceDiagram]:
    """Diagrams for dimensions 0..max_dim of the truncated Rips filtration."""
    if max_dim not in (0, 1):
        raise ConfigError(f"max_dim must be 0 or 1, got {max_dim}")
    if not max_scale > 0:
        raise ConfigError(f"max_scale must be > 0, got {max_scale}")
    pts = cloud.points
    n = len(pts)
    if n < 1:
        raise ConfigError("point cloud must contain at least one point")

    diff = pts[:, None, :] - pts[None, :, :]
    # Plain sqrt of squares: bit-identical to scalar math, unlike hypot.
    dist = np.sqrt(diff[..., 0] ** 2 + diff[..., 1] ** 2)

    vertex_values = [0.0] * n

    edges = [
        (float(dist[i, j]), (i, j))
        for i, j in combinations(range(n), 2)
        if dist[i, j] <= max_scale
    ]
    edges.sort()
    edge_values = [v for v, _ in edges]
    edge_index = {key: row for row, (_, key) in enumerate(edges)}
    edge_boundaries = [(1 << i) | (1 << j) for _, (i, j) in edges]

    values_by_dim: list[list[float]] = [vertex_values, edge_values]
    boundaries_by_dim: list[list[int]] = [[], edge_boundaries]

    if max_dim >= 1:
        triangles = []
        for i, j, k in combinations(range(n), 3):
            value = float(max(dist[i, j], dist[i, k], dist[j, k]))
            if value <= max_scale:
                triangles.append((value, (i, j, k)))
        triangles.sort()
        tri_boundaries = [
            (1 << edge_index[(i, j)])
            | (1 << edge_index[(i, k)])
            | (1 << edge_index[(j, k)])
            for _, (i, j, k) in triangles
        ]
        values_by_dim.append([v for v, _ in triangles])
        boundaries_by_dim.append(tri_boundaries)

    pairs_by_dim = persistence_from_filtration(
        values_by_dim, boundaries_by_dim, max_report_dim=max_dim
    )
    return [
        make_diagram(d, pairs_by_dim[d], FiltrationKind.VIETORIS_RIPS)
        for d in range(max_dim + 1)
    ]
