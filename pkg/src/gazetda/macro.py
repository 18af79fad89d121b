"""Macro-event statistics of fixations and saccades.

Per-segment quantities (amplitude, integral amplitude, peak amplitude) and
whole-track quantities (integral amplitude, convex-hull area) are aggregated
into a fixed-schema feature vector: variable-length statistic sets are
summarized by (min, max, mean, population std), with empty sets encoded as
four zeros so every track yields the same columns.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DataError
from .gaze.represent import segment_events, to_point_cloud
from .gaze.types import PointCloud, ScanPath, Segment


def saccade_amplitude(seg: Segment) -> float:
    """Distance between the first and last point of the segment."""
    return float(np.hypot(*(seg.points[-1] - seg.points[0])))


def integral_amplitude(seg: Segment) -> float:
    """Sum of elementary step lengths within the segment."""
    d = np.diff(seg.points, axis=0)
    return float(np.hypot(d[:, 0], d[:, 1]).sum())


def track_integral_amplitude(path: ScanPath) -> float:
    """Sum of elementary step lengths over the whole track."""
    return float(np.hypot(np.diff(path.x), np.diff(path.y)).sum())


def peak_amplitude(seg: Segment) -> float:
    """Largest elementary step length within the segment."""
    if len(seg) < 2:
        raise DataError("peak amplitude needs a segment of >= 2 points")
    d = np.diff(seg.points, axis=0)
    return float(np.hypot(d[:, 0], d[:, 1]).max())


def convex_hull_area(cloud: PointCloud) -> float:
    """Area of the 2D convex hull (0 for collinear or < 3 distinct points).

    Andrew's monotone chain builds the hull; the shoelace formula gives the
    area. Duplicate and collinear points are tolerated.
    """
    pts = np.unique(cloud.points, axis=0)
    if len(pts) < 3:
        return 0.0
    # pts is sorted lexicographically by np.unique.
    def cross(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
        return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))

    def half(points: np.ndarray) -> list[np.ndarray]:
        chain: list[np.ndarray] = []
        for p in points:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return 0.0
    v = np.array(hull)
    x, y = v[:, 0], v[:, 1]
    return float(abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))) / 2.0)


def summarize(values: Sequence[float]) -> tuple[float, float, float, float]:
    """(min, max, mean, population std); the empty set encodes as zeros."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        return (0.0, 0.0, 0.0, 0.0)
    return (
        float(arr.min()),
        float(arr.max()),
        float(arr.mean()),
        float(arr.std()),
    )


_SUMMARY_GROUPS = (
    "fix_len",
    "sacc_len",
    "sacc_amp",
    "fix_iamp",
    "sacc_iamp",
    "sacc_peak_amp",
)

MACRO_FEATURE_NAMES: tuple[str, ...] = (
    "fix_count",
    "sacc_count",
    *(
        f"{group}_{stat}"
        for group in _SUMMARY_GROUPS
        for stat in ("min", "max", "mean", "std")
    ),
    "track_iamp",
    "hull_area",
)


def macro_features(path: ScanPath) -> np.ndarray:
    """Fixed-order macro feature vector for one preprocessed, labeled track.

    Columns follow :data:`MACRO_FEATURE_NAMES`. Peak amplitudes skip
    single-sample saccades (they have no elementary step).
    """
    fixations, saccades = segment_events(path)
    groups = {
        "fix_len": [float(len(s)) for s in fixations],
        "sacc_len": [float(len(s)) for s in saccades],
        "sacc_amp": [saccade_amplitude(s) for s in saccades],
        "fix_iamp": [integral_amplitude(s) for s in fixations],
        "sacc_iamp": [integral_amplitude(s) for s in saccades],
        "sacc_peak_amp": [peak_amplitude(s) for s in saccades if len(s) >= 2],
    }
    values = [float(len(fixations)), float(len(saccades))]
    for name in _SUMMARY_GROUPS:
        values.extend(summarize(groups[name]))
    values.append(track_integral_amplitude(path))
    values.append(convex_hull_area(to_point_cloud(path)))
    return np.array(values, dtype=np.float64)
