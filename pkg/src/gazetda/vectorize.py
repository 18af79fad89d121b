"""Fixed-length vectorizations of persistence diagrams on uniform grids.

Curves are evaluated at the knots of a shared :class:`CurveGrid` so vectors
are comparable across tracks. Essential pairs (death = inf) are clipped to
the grid end for the persistence curve, landscape, and entropy curve; the
Betti curve needs no arithmetic on deaths and keeps them unclipped.

Interval membership conventions: Betti and entropy curves count a pair alive
at a knot e when birth <= e < death; the persistence curve uses the strict
containment birth < e < death.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .errors import ValidationError
from .topology.diagram import PersistenceDiagram

DEFAULT_KNOTS = 100


@dataclass(frozen=True)
class CurveGrid:
    """Uniform evaluation grid with ``knots`` points from start to end."""

    start: float
    end: float
    knots: int = DEFAULT_KNOTS

    def __post_init__(self) -> None:
        if not (math.isfinite(self.start) and math.isfinite(self.end)):
            raise ValidationError("grid bounds must be finite")
        if not self.start < self.end:
            raise ValidationError(
                f"grid start must be < end, got [{self.start}, {self.end}]"
            )
        if self.knots < 2:
            raise ValidationError(f"grid needs >= 2 knots, got {self.knots}")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.end, self.knots)


@dataclass(frozen=True)
class FeatureVector:
    """A vectorized diagram plus the provenance needed to name its columns."""

    values: np.ndarray
    curve: str
    dimension: int
    filtration_kind: str
    track_id: str = ""
    representation: str = ""

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.float64)
        if not np.all(np.isfinite(vals)):
            raise ValidationError("feature vector values must be finite")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def with_source(self, track_id: str, representation: str) -> "FeatureVector":
        return replace(self, track_id=track_id, representation=representation)


def _births_deaths(d: PersistenceDiagram) -> tuple[np.ndarray, np.ndarray]:
    if not d.pairs:
        return np.zeros(0), np.zeros(0)
    arr = np.array([[p.birth, p.death] for p in d.pairs], dtype=np.float64)
    return arr[:, 0], arr[:, 1]


def betti_curve(d: PersistenceDiagram, g: CurveGrid) -> FeatureVector:
    """Count of pairs alive at each knot (birth <= e < death)."""
    eps = g.values()
    births, deaths = _births_deaths(d)
    alive = (births[:, None] <= eps[None, :]) & (eps[None, :] < deaths[:, None])
    return FeatureVector(
        values=alive.sum(axis=0).astype(np.float64),
        curve="betti",
        dimension=d.dimension,
        filtration_kind=d.filtration_kind.value,
    )


def persistence_curve(d: PersistenceDiagram, g: CurveGrid) -> FeatureVector:
    """Total clipped persistence of pairs strictly containing each knot."""
    eps = g.values()
    births, deaths = _births_deaths(d)
    deaths = np.minimum(deaths, g.end)
    inside = (births[:, None] < eps[None, :]) & (eps[None, :] < deaths[:, None])
    persist = deaths - births
    return FeatureVector(
        values=(persist[:, None] * inside).sum(axis=0),
        curve="persistence",
        dimension=d.dimension,
        filtration_kind=d.filtration_kind.value,
    )


def landscape(d: PersistenceDiagram, g: CurveGrid, levels: int = 3) -> FeatureVector:
    """Persistence landscape: n-th largest tent value per knot, level-major.

    Output length is ``levels * g.knots``; level n occupies the slice
    ``[(n-1) * knots, n * knots)``.
    """
    if levels < 1:
        raise ValidationError(f"landscape needs >= 1 level, got {levels}")
    eps = g.values()
    births, deaths = _births_deaths(d)
    deaths = np.minimum(deaths, g.end)
    if len(births):
        tents = np.maximum(
            0.0,
            np.minimum(eps[None, :] - births[:, None], deaths[:, None] - eps[None, :]),
        )
        top = -np.sort(-tents, axis=0)[:levels]
    else:
        top = np.zeros((0, g.knots))
    if top.shape[0] < levels:
        top = np.vstack([top, np.zeros((levels - top.shape[0], g.knots))])
    return FeatureVector(
        values=top.ravel(),
        curve="landscape",
        dimension=d.dimension,
        filtration_kind=d.filtration_kind.value,
    )


def entropy_curve(d: PersistenceDiagram, g: CurveGrid) -> FeatureVector:
    """Shannon entropy of alive bars' normalized clipped lengths per knot.

    Normalization uses the total clipped persistence of ALL bars, so the
    curve is continuous in the diagram under the clipping rule.
    """
    eps = g.values()
    births, deaths = _births_deaths(d)
    deaths = np.minimum(deaths, g.end)
    lengths = deaths - births
    total = lengths.sum()
    if total <= 0:
        return FeatureVector(
            values=np.zeros(g.knots),
            curve="entropy",
            dimension=d.dimension,
            filtration_kind=d.filtration_kind.value,
        )
    p = lengths / total
    terms = np.where(p > 0, -p * np.log(np.where(p > 0, p, 1.0)), 0.0)
    alive = (births[:, None] <= eps[None, :]) & (eps[None, :] < deaths[:, None])
    return FeatureVector(
        values=(terms[:, None] * alive).sum(axis=0),
        curve="entropy",
        dimension=d.dimension,
        filtration_kind=d.filtration_kind.value,
    )


def persistence_entropy(d: PersistenceDiagram, clip: Optional[float] = None) -> float:
    """Scalar entropy of normalized bar lengths over the whole diagram.

    Essential pairs are clipped to ``clip`` when given, otherwise to the
    largest finite death. Returns 0 for the empty diagram and whenever no
    positive total persistence remains after clipping.
    """
    births, deaths = _births_deaths(d)
    if len(births) == 0:
        return 0.0
    if clip is None:
        finite = deaths[np.isfinite(deaths)]
        clip = float(finite.max()) if len(finite) else float(births.max())
    lengths = np.minimum(deaths, clip) - births
    lengths = np.maximum(lengths, 0.0)
    total = lengths.sum()
    if total <= 0:
        return 0.0
    p = lengths / total
    p = p[p > 0]
    return float(-(p * np.log(p)).sum())
