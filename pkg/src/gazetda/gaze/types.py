"""Core gaze-data types: scanpaths and the representations derived from them.

A :class:`ScanPath` stores its samples as parallel numpy arrays (timestamps,
coordinates, event labels); missing coordinates are NaN. The derived
representations — :class:`TimeSeries`, :class:`PointCloud`, :class:`HeatMap`,
:class:`Segment` — are thin validated wrappers around numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Iterator, NamedTuple, Optional

import numpy as np

from ..errors import ValidationError


class EventLabel(IntEnum):
    """Per-sample event label. Values 0..2 match the track CSV encoding."""

    FIXATION = 0
    SACCADE = 1
    BLINK = 2
    UNKNOWN = -1


class Task(str, Enum):
    """Visual stimulus task of a recording. SYNTH marks generated tracks."""

    FIX = "FIX"
    HS = "HS"
    RS = "RS"
    TEXT = "TEXT"
    GAME = "GAME"
    SYNTH = "SYNTH"


class Channel(str, Enum):
    """1D time-series channel extracted from a scanpath."""

    X = "x"
    Y = "y"
    AMP = "amp"


class RawSample(NamedTuple):
    """One gaze sample; ``x``/``y`` are None when the coordinate is missing."""

    t: int
    x: Optional[float]
    y: Optional[float]
    label: EventLabel


@dataclass
class ScanPath:
    """An ordered gaze recording with per-sample event labels.

    Attributes
    ----------
    t : int64 array
        Timestamps in milliseconds, strictly increasing.
    x, y : float64 arrays
        Gaze coordinates in degrees of visual angle; NaN marks a missing
        sample (always both coordinates at once).
    labels : int8 array
        :class:`EventLabel` values.
    """

    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    labels: np.ndarray
    track_id: str = ""
    subject_id: str = ""
    task: Task = Task.SYNTH
    round_num: int = 1
    session: int = 1

    def __post_init__(self) -> None:
        self.t = np.asarray(self.t, dtype=np.int64)
        self.x = np.asarray(self.x, dtype=np.float64)
        self.y = np.asarray(self.y, dtype=np.float64)
        self.labels = np.asarray(self.labels, dtype=np.int8)
        n = len(self.t)
        if not (len(self.x) == len(self.y) == len(self.labels) == n):
            raise ValidationError("scanpath arrays have inconsistent lengths")
        if n >= 2 and not np.all(np.diff(self.t) > 0):
            raise ValidationError(
                f"timestamps must strictly increase (track {self.track_id!r})"
            )
        if np.any(np.isnan(self.x) != np.isnan(self.y)):
            raise ValidationError(
                f"x and y must be missing together (track {self.track_id!r})"
            )

    def __len__(self) -> int:
        return len(self.t)

    @property
    def valid_mask(self) -> np.ndarray:
        return ~np.isnan(self.x)

    @property
    def has_missing(self) -> bool:
        return bool(np.isnan(self.x).any())

    def samples(self) -> Iterator[RawSample]:
        for i in range(len(self.t)):
            missing = np.isnan(self.x[i])
            yield RawSample(
                t=int(self.t[i]),
                x=None if missing else float(self.x[i]),
                y=None if missing else float(self.y[i]),
                label=EventLabel(int(self.labels[i])),
            )

    def points(self) -> np.ndarray:
        """(n, 2) coordinate array in sample order."""
        return np.column_stack([self.x, self.y])

    def replace(self, **kwargs) -> "ScanPath":
        data = {
            "t": self.t,
            "x": self.x,
            "y": self.y,
            "labels": self.labels,
            "track_id": self.track_id,
            "subject_id": self.subject_id,
            "task": self.task,
            "round_num": self.round_num,
            "session": self.session,
        }
        data.update(kwargs)
        return ScanPath(**data)


@dataclass(frozen=True)
class TimeSeries:
    """A finite 1D series extracted from one scanpath channel."""

    values: np.ndarray
    channel: Channel
    track_id: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", np.asarray(self.values, dtype=np.float64)
        )
        if self.values.ndim != 1 or len(self.values) < 1:
            raise ValidationError("time series must be a non-empty 1D array")
        if not np.all(np.isfinite(self.values)):
            raise ValidationError("time series values must be finite")
        if self.channel == Channel.AMP and np.any(self.values < 0):
            raise ValidationError("amplitude series values must be >= 0")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PointCloud:
    """An unordered multiset of 2D points (order of rows carries no meaning)."""

    points: np.ndarray

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValidationError("point cloud must be an (n, 2) array")
        if not np.all(np.isfinite(pts)):
            raise ValidationError("point cloud coordinates must be finite")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class HeatMap:
    """A nonnegative density grid with its bounding box in degrees.

    ``grid[i, j]`` is the density at row i (y direction) and column j
    (x direction); ``extent`` is (x_min, x_max, y_min, y_max).
    """

    grid: np.ndarray
    extent: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        g = np.asarray(self.grid, dtype=np.float64)
        if g.ndim != 2 or g.shape[0] < 2 or g.shape[1] < 2:
            raise ValidationError("heatmap grid must be at least 2x2")
        if not np.all(np.isfinite(g)) or np.any(g < 0):
            raise ValidationError("heatmap cells must be finite and >= 0")
        if not g.sum() > 0:
            raise ValidationError("heatmap must have positive total mass")
        object.__setattr__(self, "grid", g)
        object.__setattr__(self, "extent", tuple(float(v) for v in self.extent))

    @property
    def shape(self) -> tuple[int, int]:
        return self.grid.shape


@dataclass(frozen=True)
class Segment:
    """A maximal run of identically-labeled samples (fixation or saccade)."""

    kind: EventLabel
    points: np.ndarray = field(repr=False)
    start_index: int = 0
    end_index: int = 0

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 1:
            raise ValidationError("segment needs at least one 2D point")
        if self.end_index - self.start_index + 1 != len(pts):
            raise ValidationError("segment indices inconsistent with points")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)
