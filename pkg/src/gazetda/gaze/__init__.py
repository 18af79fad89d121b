"""Gaze recordings: parsing, preprocessing, representations, synthesis."""

from .io import format_track, load_track, parse_track, track_filename
from .preprocess import DEFAULT_SPIKE_THRESHOLD, preprocess
from .represent import (
    scott_bandwidth,
    segment_events,
    to_heatmap,
    to_point_cloud,
    to_time_series,
)
from .synthetic import (
    SynthClass,
    SynthConfig,
    generate_synthetic,
    load_synth_config,
    synth_config_from_mapping,
)
from .types import (
    Channel,
    EventLabel,
    HeatMap,
    PointCloud,
    RawSample,
    ScanPath,
    Segment,
    Task,
    TimeSeries,
)

__all__ = [
    "Channel",
    "DEFAULT_SPIKE_THRESHOLD",
    "EventLabel",
    "HeatMap",
    "PointCloud",
    "RawSample",
    "ScanPath",
    "Segment",
    "SynthClass",
    "SynthConfig",
    "Task",
    "TimeSeries",
    "format_track",
    "generate_synthetic",
    "load_synth_config",
    "load_track",
    "parse_track",
    "preprocess",
    "scott_bandwidth",
    "segment_events",
    "synth_config_from_mapping",
    "to_heatmap",
    "to_point_cloud",
    "to_time_series",
    "track_filename",
]
