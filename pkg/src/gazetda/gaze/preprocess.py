"""Noise removal for raw scanpaths: spike rejection and gap interpolation.

A sample is a spike when its elementary step from the preceding accepted
sample exceeds the threshold AND dropping it brings the local step (previous
accepted sample to next available sample) back under the threshold. Spikes
are marked missing, then every interior missing sample is filled by linear
interpolation in the timestamp; leading and trailing missing samples are
dropped because they have no anchor on one side.

Interpolated values can themselves expose a kept sample as a spike (the
filled neighbor may sit close to the previous sample while the original
neighbor did not), so the spike scan is repeated on the interpolated track
until no originally-measured sample is flagged. Removing an interpolated
sample never changes the track (it re-interpolates to the same value), which
bounds the iteration by the number of measured samples and makes the whole
operation idempotent.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConfigError, DegenerateTrackError
from .types import ScanPath

DEFAULT_SPIKE_THRESHOLD = 30.0


def _spike_pass(points: np.ndarray, threshold: float) -> list[int]:
    """Forward walk over the given points, dropping removable spikes.

    Returns the surviving positions (into ``points``). The first point is
    never dropped (no predecessor step exists) and neither is the last when
    flagged (dropping it leaves no local step to reduce).
    """
    kept = [0]
    i = 1
    n = len(points)
    while i < n:
        a = points[kept[-1]]
        step = float(np.hypot(*(points[i] - a)))
        if step > threshold and i + 1 < n:
            healed = float(np.hypot(*(points[i + 1] - a)))
            if healed < threshold:
                i += 1
                continue
        kept.append(i)
        i += 1
    return kept


def _interpolate(path: ScanPath, anchors: np.ndarray) -> ScanPath:
    """Trim to the anchor range and fill non-anchor samples linearly in t."""
    lo, hi = int(anchors[0]), int(anchors[-1])
    t = path.t[lo : hi + 1]
    x = path.x[lo : hi + 1].copy()
    y = path.y[lo : hi + 1].copy()
    labels = path.labels[lo : hi + 1]

    local = anchors - lo
    fill = np.ones(len(t), dtype=bool)
    fill[local] = False
    if fill.any():
        tf = t.astype(np.float64)
        x[fill] = np.interp(tf[fill], tf[local], x[local])
        y[fill] = np.interp(tf[fill], tf[local], y[local])
    return path.replace(t=t, x=x, y=y, labels=labels)


def preprocess(
    path: ScanPath, spike_threshold: float = DEFAULT_SPIKE_THRESHOLD
) -> ScanPath:
    """Return a spike-free, gap-free copy of ``path``.

    Raises :class:`ConfigError` for a non-positive threshold and
    :class:`DegenerateTrackError` when fewer than 2 measured samples survive.
    Labels are preserved, including on interpolated samples.
    """
    if not spike_threshold > 0:
        raise ConfigError(f"spike_threshold must be > 0, got {spike_threshold}")
    anchors = np.flatnonzero(path.valid_mask)
    if len(anchors) < 2:
        raise DegenerateTrackError(
            f"track {path.track_id!r} has {len(anchors)} valid samples, need >= 2"
        )

    # Spike scan over the measured samples only, then interpolate; rescan the
    # filled track and drop any measured sample the filled values expose.
    pts = np.column_stack([path.x, path.y])
    anchors = anchors[_spike_pass(pts[anchors], spike_threshold)]
    while True:
        track = _interpolate(path, anchors)
        survivors = set(_spike_pass(track.points(), spike_threshold))
        lo = int(anchors[0])
        flagged = [a for a in anchors.tolist() if (a - lo) not in survivors]
        if not flagged:
            return track
        anchors = anchors[anchors != flagged[0]]
        if len(anchors) < 2:
            raise DegenerateTrackError(
                f"track {path.track_id!r} degenerated during spike removal"
            )
