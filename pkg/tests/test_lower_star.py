import math

import numpy as np
import pytest

from gazetda.gaze.types import Channel, TimeSeries
from gazetda.topology import FiltrationKind, lower_star_1d, upper_star_1d

from oracles import lower_star_oracle


def series(values):
    return TimeSeries(values=np.asarray(values, dtype=float), channel=Channel.X)


def pairs_of(diagram):
    return [(p.birth, p.death) for p in diagram.pairs]


def test_wiggle_series_matches_hand_derived_diagram():
    # Two interior minima at 0 merge into the global component at the local
    # maxima 1 and 2; the threshold-sweep oracle confirms the hand derivation.
    values = [0, 1, 0, 2, 0]
    expected = sorted([(0.0, 1.0), (0.0, 2.0), (0.0, math.inf)])
    assert lower_star_oracle(values) == expected
    assert pairs_of(lower_star_1d(series(values))) == expected


def test_monotone_series_has_single_essential_pair():
    assert pairs_of(lower_star_1d(series([0, 1, 2, 3]))) == [(0.0, math.inf)]


def test_constant_series_collapses_to_one_pair():
    assert pairs_of(lower_star_1d(series([5, 5, 5]))) == [(5.0, math.inf)]


def test_single_sample_series():
    assert pairs_of(lower_star_1d(series([2.5]))) == [(2.5, math.inf)]


def test_filtration_kind_is_recorded():
    assert lower_star_1d(series([1, 2])).filtration_kind == FiltrationKind.LOWER_STAR
    assert upper_star_1d(series([1, 2])).filtration_kind == FiltrationKind.UPPER_STAR


def test_oracle_equivalence_on_random_integer_series():
    rng = np.random.default_rng(42)
    for _ in range(300):
        n = int(rng.integers(1, 65))
        values = rng.integers(0, 16, size=n).astype(float)
        got = pairs_of(lower_star_1d(series(values)))
        assert got == lower_star_oracle(values)


def _strict_extrema_runs(values):
    """(minima, maxima) counted once per plateau."""
    n = len(values)
    minima = maxima = 0
    i = 0
    while i < n:
        j = i
        while j + 1 < n and values[j + 1] == values[i]:
            j += 1
        left_up = i == 0 or values[i - 1] > values[i]
        right_up = j == n - 1 or values[j + 1] > values[i]
        left_down = i == 0 or values[i - 1] < values[i]
        right_down = j == n - 1 or values[j + 1] < values[i]
        if left_up and right_up:
            minima += 1
        if left_down and right_down and not (i == 0 and j == n - 1):
            maxima += 1
        i = j + 1
    return minima, maxima


def test_pair_count_equals_local_minimum_count():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(1, 50))
        values = rng.integers(0, 8, size=n).astype(float)
        diag = lower_star_1d(series(values))
        minima, _ = _strict_extrema_runs(values)
        assert len(diag.pairs) == minima
        infinite = [p for p in diag.pairs if math.isinf(p.death)]
        assert len(infinite) == 1
        # Every finite death is the value of some strict local maximum run
        # (interior) -- compare against the set of such values.
        interior_max_values = set()
        for i in range(n):
            lo = i
            while lo > 0 and values[lo - 1] == values[i]:
                lo -= 1
            hi = i
            while hi + 1 < n and values[hi + 1] == values[i]:
                hi += 1
            if lo > 0 and hi < n - 1 and values[lo - 1] < values[i] > values[hi + 1]:
                interior_max_values.add(values[i])
        for p in diag.pairs:
            if math.isfinite(p.death):
                assert p.death in interior_max_values


def test_upper_star_single_maximum():
    diag = upper_star_1d(series([0, 1, 0]))
    assert pairs_of(diag) == [(1.0, math.inf)]


def test_upper_star_counts_match_negated_lower_star():
    rng = np.random.default_rng(3)
    for _ in range(50):
        values = rng.normal(size=int(rng.integers(1, 40)))
        up = upper_star_1d(series(values))
        down = lower_star_1d(series(-values))
        assert len(up.pairs) == len(down.pairs)
        # Finite pairs are mirrored with birth/death swapped and negated.
        got = sorted((p.birth, p.death) for p in up.finite_pairs)
        mirrored = sorted((-p.death, -p.birth) for p in down.finite_pairs)
        assert got == pytest.approx(mirrored)


def test_upper_star_essential_pair_is_global_maximum():
    values = [3.0, 7.0, 1.0]
    diag = upper_star_1d(series(values))
    essentials = [p for p in diag.pairs if math.isinf(p.death)]
    assert len(essentials) == 1
    assert essentials[0].birth == 7.0
