"""Derived data representations: time series, point clouds, heatmaps, events.

All functions expect a preprocessed scanpath (no missing coordinates).
"""

from __future__ import annotations

from typing import Optional, Union

import numpy as np

from ..errors import ConfigError, ValidationError, ZeroVarianceError
from .types import Channel, EventLabel, HeatMap, PointCloud, ScanPath, Segment, TimeSeries


def to_time_series(path: ScanPath, channel: Union[Channel, str]) -> TimeSeries:
    """Extract one 1D channel: x or y coordinates, or the elementary step
    lengths (``amp``, Euclidean distance between consecutive samples)."""
    channel = Channel(channel)
    if path.has_missing:
        raise ValidationError("time series requires a preprocessed scanpath")
    if channel == Channel.X:
        values = path.x.copy()
    elif channel == Channel.Y:
        values = path.y.copy()
    else:
        values = np.hypot(np.diff(path.x), np.diff(path.y))
    return TimeSeries(values=values, channel=channel, track_id=path.track_id)


def to_point_cloud(path: ScanPath) -> PointCloud:
    """Forget sample order: the multiset of gaze positions."""
    if path.has_missing:
        raise ValidationError("point cloud requires a preprocessed scanpath")
    return PointCloud(points=path.points())


def scott_bandwidth(points: np.ndarray) -> float:
    """Scott's-rule bandwidth: n^(-1/6) times the mean per-axis std."""
    n = len(points)
    spread = float(np.mean(np.std(points, axis=0)))
    return n ** (-1.0 / 6.0) * spread


def to_heatmap(
    path: ScanPath,
    grid_h: int = 32,
    grid_w: int = 32,
    bandwidth: Optional[float] = None,
) -> HeatMap:
    """Gaussian kernel density estimate of the gaze positions on a grid.

    The grid covers the point bounding box padded by 3 bandwidths on every
    side; values are the isotropic Gaussian KDE evaluated at cell centers.
    ``bandwidth=None`` selects Scott's rule, which fails with
    :class:`ZeroVarianceError` when all points coincide.
    """
    if grid_h < 2 or grid_w < 2:
        raise ConfigError(f"heatmap grid must be >= 2x2, got {grid_h}x{grid_w}")
    if path.has_missing or len(path) < 2:
        raise ValidationError("heatmap requires a preprocessed scanpath of >= 2 samples")
    pts = path.points()
    if bandwidth is None:
        bandwidth = scott_bandwidth(pts)
        if bandwidth <= 0:
            raise ZeroVarianceError(
                "all gaze points coincide; pass an explicit bandwidth"
            )
    elif bandwidth <= 0:
        raise ConfigError(f"bandwidth must be > 0, got {bandwidth}")

    pad = 3.0 * bandwidth
    x0, x1 = pts[:, 0].min() - pad, pts[:, 0].max() + pad
    y0, y1 = pts[:, 1].min() - pad, pts[:, 1].max() + pad
    cx = x0 + (np.arange(grid_w) + 0.5) * (x1 - x0) / grid_w
    cy = y0 + (np.arange(grid_h) + 0.5) * (y1 - y0) / grid_h

    norm = 1.0 / (2.0 * np.pi * bandwidth**2 * len(pts))
    inv2h2 = 1.0 / (2.0 * bandwidth**2)
    grid = np.zeros((grid_h, grid_w))
    # Accumulate in point slabs to bound the (points x cells) temporary.
    step = max(1, int(2**20 / (grid_h * grid_w)))
    for s in range(0, len(pts), step):
        chunk = pts[s : s + step]
        dx2 = (cx[None, :] - chunk[:, 0, None]) ** 2  # (chunk, W)
        dy2 = (cy[None, :] - chunk[:, 1, None]) ** 2  # (chunk, H)
        grid += np.einsum("ph,pw->hw", np.exp(-dy2 * inv2h2), np.exp(-dx2 * inv2h2))
    return HeatMap(grid=grid * norm, extent=(x0, x1, y0, y1))


def segment_events(path: ScanPath) -> tuple[list[Segment], list[Segment]]:
    """Split a labeled scanpath into maximal fixation and saccade runs.

    Blink and unknown runs belong to neither list; the returned segments are
    ordered and index-disjoint.
    """
    if path.has_missing:
        raise ValidationError("segmentation requires a preprocessed scanpath")
    fixations: list[Segment] = []
    saccades: list[Segment] = []
    labels = path.labels
    pts = path.points()
    n = len(labels)
    start = 0
    while start < n:
        end = start
        while end + 1 < n and labels[end + 1] == labels[start]:
            end += 1
        kind = int(labels[start])
        if kind in (EventLabel.FIXATION, EventLabel.SACCADE):
            seg = Segment(
                kind=EventLabel(kind),
                points=pts[start : end + 1],
                start_index=start,
                end_index=end,
            )
            (fixations if kind == EventLabel.FIXATION else saccades).append(seg)
        start = end + 1
    return fixations, saccades
