import math

import numpy as np
import pytest

from gazetda.gaze.types import Channel, TimeSeries
from gazetda.topology import (
    FiltrationKind,
    bottleneck_distance,
    lower_star_1d,
    make_diagram,
)


def diag(pairs, dim=0):
    return make_diagram(dim, pairs, FiltrationKind.LOWER_STAR)


def test_identical_diagrams_have_zero_distance():
    d = diag([(0.0, 2.0), (1.0, 3.0), (0.5, math.inf)])
    assert bottleneck_distance(d, d) == 0.0


def test_single_pair_against_empty_matches_diagonal():
    assert bottleneck_distance(diag([(0.0, 2.0)]), diag([])) == 1.0


def test_single_pair_shift():
    assert bottleneck_distance(diag([(0.0, 2.0)]), diag([(0.5, 2.0)])) == 0.5


def test_mismatched_essential_counts_is_infinite():
    a = diag([(0.0, math.inf)])
    b = diag([])
    assert bottleneck_distance(a, b) == math.inf


def test_essential_pairs_match_by_birth():
    a = diag([(0.0, math.inf), (5.0, math.inf)])
    b = diag([(0.25, math.inf), (5.5, math.inf)])
    assert bottleneck_distance(a, b) == 0.5


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        bottleneck_distance(diag([], dim=0), diag([], dim=1))


def test_symmetry_and_triangle_inequality():
    rng = np.random.default_rng(31)
    diagrams = []
    for _ in range(6):
        n = int(rng.integers(0, 8))
        births = rng.uniform(0, 2, size=n)
        deaths = births + rng.uniform(0.01, 2, size=n)
        diagrams.append(diag([(b, d) for b, d in zip(births, deaths)] + [(0.0, math.inf)]))
    for a in diagrams:
        for b in diagrams:
            dab = bottleneck_distance(a, b)
            assert dab == bottleneck_distance(b, a)
            for c in diagrams:
                assert dab <= bottleneck_distance(a, c) + bottleneck_distance(c, b) + 1e-12


def test_matching_prefers_cross_match_over_diagonal():
    # One tall bar each, slightly offset: matching them costs 0.1, pushing
    # both to the diagonal would cost 5.
    a = diag([(0.0, 10.0)])
    b = diag([(0.1, 10.0)])
    assert bottleneck_distance(a, b) == pytest.approx(0.1)


def test_stability_under_series_perturbation():
    rng = np.random.default_rng(37)
    delta = 0.01
    for _ in range(40):
        n = int(rng.integers(2, 64))
        base = rng.uniform(0, 4, size=n)
        noise = rng.uniform(-delta, delta, size=n)
        d0 = lower_star_1d(TimeSeries(values=base, channel=Channel.X))
        d1 = lower_star_1d(TimeSeries(values=base + noise, channel=Channel.X))
        assert bottleneck_distance(d0, d1) <= delta + 1e-12
