"""Synthetic labeled gaze tracks for desk-scale experiments.

Each class alternates fixations (gaze jitter around a target) with saccades
(ballistic jumps to a new target). Classes differ in saccade rate, fixation
dispersion, and saccade amplitude, which separates them for both macro-event
statistics and topological time-series features. Generation is deterministic
given the master seed: every track draws from its own generator seeded by
(seed, class index, track index).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Union

import numpy as np

from .._config import check_keys, load_flat_toml
from ..errors import ConfigError
from .types import EventLabel, ScanPath, Task


@dataclass(frozen=True)
class SynthClass:
    """Parameters of one synthetic subject class."""

    name: str
    saccade_rate: float  # expected saccades per second; 0 = fixation only
    fixation_dispersion: float  # per-axis jitter std during fixations, deg
    saccade_amplitude_mean: float  # deg
    saccade_amplitude_std: float  # deg

    def __post_init__(self) -> None:
        if self.saccade_rate < 0:
            raise ConfigError(f"class {self.name}: saccade_rate must be >= 0")
        if self.fixation_dispersion < 0:
            raise ConfigError(f"class {self.name}: fixation_dispersion must be >= 0")
        if self.saccade_amplitude_mean <= 0:
            raise ConfigError(f"class {self.name}: saccade_amplitude_mean must be > 0")
        if self.saccade_amplitude_std < 0:
            raise ConfigError(f"class {self.name}: saccade_amplitude_std must be >= 0")


@dataclass(frozen=True)
class SynthConfig:
    classes: tuple[SynthClass, ...]
    tracks_per_class: int = 20
    duration_ms: int = 4000
    sample_period_ms: int = 4
    field_halfwidth: float = 15.0  # targets stay within +-this many degrees

    def __post_init__(self) -> None:
        if not self.classes:
            raise ConfigError("at least one synthetic class is required")
        if self.tracks_per_class < 1:
            raise ConfigError("tracks_per_class must be >= 1")
        if self.duration_ms <= 0 or self.sample_period_ms <= 0:
            raise ConfigError("durations must be positive")
        if self.duration_ms < 2 * self.sample_period_ms:
            raise ConfigError("duration_ms must cover at least 2 samples")
        if self.field_halfwidth <= 0:
            raise ConfigError("field_halfwidth must be > 0")


_SCALAR_KEYS = {
    "tracks_per_class",
    "duration_ms",
    "sample_period_ms",
    "field_halfwidth",
}
_ARRAY_KEYS = {
    "class_names",
    "saccade_rate",
    "fixation_dispersion",
    "saccade_amplitude_mean",
    "saccade_amplitude_std",
}
_REQUIRED = {
    "saccade_rate",
    "fixation_dispersion",
    "saccade_amplitude_mean",
    "saccade_amplitude_std",
}


def synth_config_from_mapping(data: Mapping[str, Any], where: str = "synth config") -> SynthConfig:
    check_keys(data, _SCALAR_KEYS | _ARRAY_KEYS, _REQUIRED, where)
    for key in sorted(_ARRAY_KEYS & set(data)):
        if not isinstance(data[key], list) or not data[key]:
            raise ConfigError(f"{where}: {key} must be a non-empty array")
    lengths = {k: len(data[k]) for k in sorted(_ARRAY_KEYS & set(data))}
    if len(set(lengths.values())) != 1:
        raise ConfigError(f"{where}: per-class arrays must share one length, got {lengths}")
    n_classes = next(iter(lengths.values()))
    names = data.get("class_names", [f"c{i:02d}" for i in range(n_classes)])
    classes = tuple(
        SynthClass(
            name=str(names[i]),
            saccade_rate=float(data["saccade_rate"][i]),
            fixation_dispersion=float(data["fixation_dispersion"][i]),
            saccade_amplitude_mean=float(data["saccade_amplitude_mean"][i]),
            saccade_amplitude_std=float(data["saccade_amplitude_std"][i]),
        )
        for i in range(n_classes)
    )
    if len({c.name for c in classes}) != n_classes:
        raise ConfigError(f"{where}: class names must be unique")
    return SynthConfig(
        classes=classes,
        tracks_per_class=int(data.get("tracks_per_class", 20)),
        duration_ms=int(data.get("duration_ms", 4000)),
        sample_period_ms=int(data.get("sample_period_ms", 4)),
        field_halfwidth=float(data.get("field_halfwidth", 15.0)),
    )


def load_synth_config(path: Union[str, Path]) -> SynthConfig:
    """Load a synthetic-generator config from a flat TOML file."""
    return synth_config_from_mapping(load_flat_toml(path), where=str(path))


def _clip_to_field(p: np.ndarray, halfwidth: float) -> np.ndarray:
    return np.clip(p, -halfwidth, halfwidth)


def _generate_track(
    cls: SynthClass, cfg: SynthConfig, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = cfg.duration_ms // cfg.sample_period_ms
    period_s = cfg.sample_period_ms / 1000.0
    xy = np.zeros((n, 2))
    labels = np.full(n, EventLabel.FIXATION, dtype=np.int8)

    center = rng.uniform(-cfg.field_halfwidth / 2, cfg.field_halfwidth / 2, size=2)
    i = 0
    while i < n:
        # Fixation: exponential dwell around the current target.
        if cls.saccade_rate > 0:
            dwell_s = rng.exponential(1.0 / cls.saccade_rate)
            dwell = max(2, int(round(dwell_s / period_s)))
        else:
            dwell = n - i
        stop = min(n, i + dwell)
        k = stop - i
        xy[i:stop] = center + rng.normal(0.0, cls.fixation_dispersion, size=(k, 2))
        i = stop
        if i >= n or cls.saccade_rate == 0:
            continue

        # Saccade: ballistic jump to a new target inside the field.
        amp = max(0.5, rng.normal(cls.saccade_amplitude_mean, cls.saccade_amplitude_std))
        angle = rng.uniform(0.0, 2.0 * np.pi)
        target = _clip_to_field(
            center + amp * np.array([np.cos(angle), np.sin(angle)]), cfg.field_halfwidth
        )
        true_amp = float(np.hypot(*(target - center)))
        sacc_ms = 20.0 + 2.2 * true_amp  # rough main-sequence duration
        m = max(2, int(round(sacc_ms / cfg.sample_period_ms)))
        m = min(m, n - i)
        if m >= 1:
            frac = (np.arange(1, m + 1) / m)[:, None]
            jitter = rng.normal(0.0, cls.fixation_dispersion / 4.0, size=(m, 2))
            xy[i : i + m] = center + frac * (target - center) + jitter
            labels[i : i + m] = EventLabel.SACCADE
            i += m
        center = target

    t = np.arange(n, dtype=np.int64) * cfg.sample_period_ms
    return t, xy, labels


def generate_synthetic(config: SynthConfig, seed: int) -> list[ScanPath]:
    """Generate ``tracks_per_class`` labeled tracks for every class."""
    tracks: list[ScanPath] = []
    for ci, cls in enumerate(config.classes):
        for ti in range(config.tracks_per_class):
            rng = np.random.default_rng([seed, ci, ti])
            t, xy, labels = _generate_track(cls, config, rng)
            tracks.append(
                ScanPath(
                    t=t,
                    x=xy[:, 0],
                    y=xy[:, 1],
                    labels=labels,
                    track_id=f"S{cls.name}_R{ti + 1}_S1_SYNTH",
                    subject_id=cls.name,
                    task=Task.SYNTH,
                    round_num=ti + 1,
                    session=1,
                )
            )
    return tracks
