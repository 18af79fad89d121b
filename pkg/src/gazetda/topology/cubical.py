"""Sublevel-set persistence of 2D grids (dimensions 0 and 1).

Vertex-based cubical model: every grid cell is a vertex carrying its value,
edges join 4-neighbors and enter at the max of their endpoints, unit squares
enter at the max of their 4 corners. Sublevel sets under this model are the
4-connected thresholded grids. The superlevel direction is computed by
negating the values, running the sublevel computation, and negating the
resulting pairs back (finite (b, d) becomes (-d, -b); essential births are
negated, death stays inf).
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np

from ..errors import ConfigError
from ..gaze.types import HeatMap
from .diagram import FiltrationKind, PersistenceDiagram, make_diagram
from .reduction import persistence_from_filtration


def _sublevel_pairs(grid: np.ndarray) -> list[list[tuple[float, float]]]:
    h, w = grid.shape

    def vid(r: int, c: int) -> int:
        return r * w + c

    vertices = sorted(
        (float(grid[r, c]), (vid(r, c),)) for r in range(h) for c in range(w)
    )
    vertex_row = {key[0]: row for row, (_, key) in enumerate(vertices)}

    edges = []
    for r in range(h):
        for c in range(w):
            if c + 1 < w:
                edges.append(
                    (float(max(grid[r, c], grid[r, c + 1])), (vid(r, c), vid(r, c + 1)))
                )
            if r + 1 < h:
                edges.append(
                    (float(max(grid[r, c], grid[r + 1, c])), (vid(r, c), vid(r + 1, c)))
                )
    edges.sort()
    edge_row = {key: row for row, (_, key) in enumerate(edges)}
    edge_boundaries = [
        (1 << vertex_row[a]) | (1 << vertex_row[b]) for _, (a, b) in edges
    ]

    squares = []
    for r in range(h - 1):
        for c in range(w - 1):
            corners = (vid(r, c), vid(r, c + 1), vid(r + 1, c), vid(r + 1, c + 1))
            value = float(
                max(grid[r, c], grid[r, c + 1], grid[r + 1, c], grid[r + 1, c + 1])
            )
            squares.append((value, corners))
    squares.sort()
    square_boundaries = [
        (1 << edge_row[(a, b)])
        | (1 << edge_row[(c, d)])
        | (1 << edge_row[(a, c)])
        | (1 << edge_row[(b, d)])
        for _, (a, b, c, d) in squares
    ]

    values_by_dim = [
        [v for v, _ in vertices],
        [v for v, _ in edges],
        [v for v, _ in squares],
    ]
    boundaries_by_dim: list[list[int]] = [[], edge_boundaries, square_boundaries]
    return persistence_from_filtration(values_by_dim, boundaries_by_dim, max_report_dim=1)


def sublevel_cubical_2d(
    heatmap: Union[HeatMap, np.ndarray], direction: str = "sublevel"
) -> list[PersistenceDiagram]:
    """Dimension-0 and dimension-1 diagrams of a 2D grid filtration."""
    if direction not in ("sublevel", "superlevel"):
        raise ConfigError(f"direction must be sublevel or superlevel, got {direction!r}")
    grid = heatmap.grid if isinstance(heatmap, HeatMap) else np.asarray(heatmap, dtype=np.float64)
    if grid.ndim != 2 or grid.size < 1:
        raise ConfigError("cubical persistence needs a non-empty 2D grid")
    if not np.all(np.isfinite(grid)):
        raise ConfigError("grid values must be finite")

    if direction == "superlevel":
        neg_pairs = _sublevel_pairs(-grid)
        kind = FiltrationKind.SUPERLEVEL_CUBICAL
        pairs_by_dim = [
            [(-b, math.inf) if math.isinf(d) else (-d, -b) for b, d in dim_pairs]
            for dim_pairs in neg_pairs
        ]
    else:
        kind = FiltrationKind.SUBLEVEL_CUBICAL
        pairs_by_dim = _sublevel_pairs(grid)

    return [make_diagram(d, pairs_by_dim[d], kind) for d in range(2)]
