"""0-dimensional persistence of 1D series under the lower-star filtration.

The series is read as a piecewise-linear function on the path graph: vertex i
carries value f(i), the edge (i, i+1) enters the filtration at
max(f(i), f(i+1)). Sweeping the threshold upward, a connected component is
born at each local minimum and dies when it merges into an older component
(elder rule). Among components born at the same value, the one whose minimum
has the smaller sample index survives a merge. The global minimum never dies
and is reported with death = inf.
"""

from __future__ import annotations

import math

import numpy as np

from ..gaze.types import TimeSeries
from .diagram import FiltrationKind, PersistenceDiagram, make_diagram


def _lower_star_pairs(values: np.ndarray) -> list[tuple[float, float]]:
    n = len(values)
    parent = np.arange(n)
    # Birth of the component rooted at i: (value, index) of its minimum.
    birth_val = values.astype(np.float64).copy()
    birth_idx = np.arange(n)
    active = np.zeros(n, dtype=bool)

    def find(i: int) -> int:
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    pairs: list[tuple[float, float]] = []
    order = np.argsort(values, kind="stable")
    for idx in order:
        idx = int(idx)
        active[idx] = True
        merge_value = float(values[idx])
        for nb in (idx - 1, idx + 1):
            if nb < 0 or nb >= n or not active[nb]:
                continue
            ra, rb = find(nb), find(idx)
            if ra == rb:
                continue
            if (birth_val[ra], birth_idx[ra]) <= (birth_val[rb], birth_idx[rb]):
                elder, younger = ra, rb
            else:
                elder, younger = rb, ra
            if merge_value > birth_val[younger]:
                pairs.append((float(birth_val[younger]), merge_value))
            parent[younger] = elder

    root = find(int(order[0]))
    pairs.append((float(birth_val[root]), math.inf))
    return pairs


def lower_star_1d(series: TimeSeries) -> PersistenceDiagram:
    """Dimension-0 diagram of the sublevel (lower-star) filtration."""
    return make_diagram(0, _lower_star_pairs(series.values), FiltrationKind.LOWER_STAR)


def upper_star_1d(series: TimeSeries) -> PersistenceDiagram:
    """Dimension-0 diagram of the superlevel (upper-star) filtration.

    Computed on the negated series; results are negated back, with finite
    pairs reordered so that birth <= death and essential pairs keeping
    death = inf (their birth becomes the value of the global maximum).
    """
    neg = _lower_star_pairs(-series.values)
    pairs = [
        (-b, math.inf) if math.isinf(d) else (-d, -b)
        for b, d in neg
    ]
    return make_diagram(0, pairs, FiltrationKind.UPPER_STAR)
