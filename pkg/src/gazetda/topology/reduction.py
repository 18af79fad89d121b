"""Boundary-matrix reduction over the two-element field.

Columns are stored as Python integers used as bitsets of row indices, so a
column addition is one XOR and the pivot (lowest nonzero entry in filtration
order, i.e. the highest row index) is ``bit_length() - 1``.

Because the boundary of a d-cell consists only of (d-1)-cells, pivots of
columns of different dimensions can never collide, and reducing each
dimension's boundary matrix separately is exactly equivalent to reducing the
full matrix in one filtration order. Cells of each dimension MUST be supplied
sorted by (filtration value, tie-break key) consistently with the global
filtration order; boundaries refer to row indices in the (d-1) list.
"""

from __future__ import annotations

import math
from typing import Sequence


def reduce_columns(columns: Sequence[int]) -> tuple[dict[int, int], list[int]]:
    """Left-to-right reduction of one dimension's boundary matrix.

    Returns ``(pivots, reduced)`` where ``pivots`` maps a row index to the
    column index whose reduced form has that row as its lowest entry, and
    ``reduced`` holds the reduced columns (0 means the column vanished).
    """
    pivots: dict[int, int] = {}
    reduced: list[int] = []
    for j, col in enumerate(columns):
        while col:
            low = col.bit_length() - 1
            k = pivots.get(low)
            if k is None:
                pivots[low] = j
                break
            col ^= reduced[k]
        reduced.append(col)
    return pivots, reduced


def persistence_from_filtration(
    values_by_dim: Sequence[Sequence[float]],
    boundaries_by_dim: Sequence[Sequence[int]],
    max_report_dim: int,
) -> list[list[tuple[float, float]]]:
    """Persistence pairs of a filtered complex, one pair list per dimension.

    Parameters
    ----------
    values_by_dim:
        ``values_by_dim[d][i]`` is the filtration value of the i-th d-cell,
        in filtration order within the dimension.
    boundaries_by_dim:
        ``boundaries_by_dim[d][i]`` is the bitset of (d-1)-cell row indices
        forming the boundary of the i-th d-cell; entry 0 of this sequence
        (vertices) is ignored.
    max_report_dim:
        Classes of dimension > this are not reported (their builders simply
        stop providing higher cells, leaving them unpaired).

    Returns pairs (birth, death) per dimension, death = inf for essential
    classes, zero-persistence pairs dropped.
    """
    top = len(values_by_dim) - 1
    # positive[d][i]: d-cell i creates a d-dimensional class
    positive: list[list[bool]] = [[True] * len(values_by_dim[0])]
    # killed[d]: d-cells destroyed by a (d+1)-cell
    killed: list[set[int]] = [set() for _ in range(top + 1)]
    pairs: list[list[tuple[float, float]]] = [[] for _ in range(max_report_dim + 1)]

    for d in range(1, top + 1):
        pivots, _ = reduce_columns(boundaries_by_dim[d])
        positive.append([True] * len(values_by_dim[d]))
        for row, col in pivots.items():
            positive[d][col] = False
            killed[d - 1].add(row)
            if d - 1 <= max_report_dim:
                birth = values_by_dim[d - 1][row]
                death = values_by_dim[d][col]
                if death > birth:
                    pairs[d - 1].append((birth, death))

    for d in range(min(max_report_dim, top) + 1):
        # Cells of the top dimension may be killed by absent higher cells;
        # callers must not report that dimension unless it is complete.
        for i, value in enumerate(values_by_dim[d]):
            if positive[d][i] and i not in killed[d]:
                pairs[d].append((value, math.inf))
    return pairs
