"""Persistent homology of time series, point clouds, and grids."""

from .bottleneck import bottleneck_distance
from .cubical import sublevel_cubical_2d
from .diagram import (
    FiltrationKind,
    PersistenceDiagram,
    PersistencePair,
    diagrams_from_csv,
    diagrams_to_csv,
    diagrams_to_json,
    make_diagram,
)
from .lower_star import lower_star_1d, upper_star_1d
from .reduction import persistence_from_filtration, reduce_columns
from .rips import vietoris_rips

__all__ = [
    "FiltrationKind",
    "PersistenceDiagram",
    "PersistencePair",
    "bottleneck_distance",
    "diagrams_from_csv",
    "diagrams_to_csv",
    "diagrams_to_json",
    "lower_star_1d",
    "make_diagram",
    "persistence_from_filtration",
    "reduce_columns",
    "sublevel_cubical_2d",
    "upper_star_1d",
    "vietoris_rips",
]
