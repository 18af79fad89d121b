"""Exact bottleneck distance between persistence diagrams.

Finite pairs may be matched to each other (sup-norm cost) or to the diagonal
(half their persistence); essential pairs match only essential pairs of the
other diagram, so diagrams with different essential-pair counts are at
distance infinity. The optimum over finite pairs is found by binary search on
the candidate cost set with a bipartite perfect-matching feasibility test,
which is exact (the answer always equals one of the candidates).
"""

from __future__ import annotations

import math

import numpy as np

from .diagram import PersistenceDiagram


def _feasible(eps: float, cost: np.ndarray, diag_a: np.ndarray, diag_b: np.ndarray) -> bool:
    """Perfect matching test for threshold eps.

    Left side: the n finite pairs of diagram A, then m diagonal slots (one
    per pair of B). Right side: the m finite pairs of B, then n diagonal
    slots (one per pair of A). A left diagonal slot j accepts only B's pair j
    (cost diag_b[j]) or any right diagonal slot (cost 0).
    """
    n, m = cost.shape
    size = n + m
    match_of_right = [-1] * size

    def neighbors(left: int) -> list[int]:
        if left < n:
            near = [j for j in range(m) if cost[left, j] <= eps]
            if diag_a[left] <= eps:
                near.append(m + left)
            return near
        j = left - n
        near = list(range(m, size))
        if diag_b[j] <= eps:
            near.append(j)
        return near

    def augment(left: int, seen: list[bool]) -> bool:
        for right in neighbors(left):
            if seen[right]:
                continue
            seen[right] = True
            if match_of_right[right] == -1 or augment(match_of_right[right], seen):
                match_of_right[right] = left
                return True
        return False

    matched = 0
    for left in range(size):
        if augment(left, [False] * size):
            matched += 1
        else:
            return False
    return matched == size


def bottleneck_distance(a: PersistenceDiagram, b: PersistenceDiagram) -> float:
    """Bottleneck matching cost; inf when essential-pair counts differ."""
    if a.dimension != b.dimension:
        raise ValueError(
            f"diagram dimensions differ: {a.dimension} vs {b.dimension}"
        )
    ess_a = sorted(p.birth for p in a.essential_pairs)
    ess_b = sorted(p.birth for p in b.essential_pairs)
    if len(ess_a) != len(ess_b):
        return math.inf
    ess_cost = max(
        (abs(x - y) for x, y in zip(ess_a, ess_b)), default=0.0
    )

    fa = np.array([[p.birth, p.death] for p in a.finite_pairs], dtype=np.float64)
    fb = np.array([[p.birth, p.death] for p in b.finite_pairs], dtype=np.float64)
    n, m = len(fa), len(fb)
    if n == 0 and m == 0:
        return float(ess_cost)

    fa = fa.reshape(n, 2)
    fb = fb.reshape(m, 2)
    cost = np.max(
        np.abs(fa[:, None, :] - fb[None, :, :]), axis=2
    ) if n and m else np.zeros((n, m))
    diag_a = (fa[:, 1] - fa[:, 0]) / 2.0 if n else np.zeros(0)
    diag_b = (fb[:, 1] - fb[:, 0]) / 2.0 if m else np.zeros(0)

    candidates = np.unique(
        np.concatenate([cost.ravel(), diag_a, diag_b, [0.0]])
    )
    lo, hi = 0, len(candidates) - 1
    # The largest candidate is always feasible (everything to the diagonal is
    # bounded by max persistence/2, which is in the set; matching everything
    # cross-diagram is bounded by max cost).
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(float(candidates[mid]), cost, diag_a, diag_b):
            hi = mid
        else:
            lo = mid + 1
    return float(max(ess_cost, candidates[lo]))
