import math

import numpy as np
import pytest

from gazetda.errors import ValidationError
from gazetda.topology import FiltrationKind, make_diagram
from gazetda.vectorize import (
    CurveGrid,
    betti_curve,
    entropy_curve,
    landscape,
    persistence_curve,
    persistence_entropy,
)

from oracles import betti_at, entropy_at, landscape_at, persistence_at


def diag(pairs, dim=0):
    return make_diagram(dim, pairs, FiltrationKind.LOWER_STAR)


def grid(start=0.0, end=4.0, knots=9):
    return CurveGrid(start=start, end=end, knots=knots)


def test_grid_validation():
    with pytest.raises(ValidationError):
        CurveGrid(start=1.0, end=1.0)
    with pytest.raises(ValidationError):
        CurveGrid(start=0.0, end=1.0, knots=1)


def test_betti_counts_membership():
    d = diag([(0.0, 1.0), (0.0, 2.0), (0.0, math.inf)])
    g = CurveGrid(start=1.5, end=2.5, knots=3)  # knots 1.5, 2.0, 2.5
    assert betti_curve(d, g).values.tolist() == [2.0, 1.0, 1.0]


def test_betti_empty_diagram_is_zero():
    assert betti_curve(diag([]), grid()).values.tolist() == [0.0] * 9


def test_betti_essential_pair_counts_everywhere_past_birth():
    d = diag([(0.0, math.inf)])
    assert betti_curve(d, grid()).values.tolist() == [1.0] * 9


def test_persistence_curve_examples():
    d = diag([(0.0, 1.0), (1.0, 3.0)])
    g = grid()  # knots 0, 0.5, ..., 4
    values = persistence_curve(d, g).values
    assert values[4] == pytest.approx(2.0)  # eps = 2: only (1,3), persistence 2
    assert values[1] == pytest.approx(1.0)  # eps = 0.5: only (0,1)
    assert persistence_curve(diag([]), g).values.tolist() == [0.0] * 9


def test_landscape_single_tent():
    d = diag([(0.0, 2.0)])
    g = CurveGrid(start=0.0, end=2.0, knots=5)  # 0, .5, 1, 1.5, 2
    fv = landscape(d, g, levels=2)
    level1 = fv.values[:5]
    level2 = fv.values[5:]
    assert level1.tolist() == [0.0, 0.5, 1.0, 0.5, 0.0]
    assert level2.tolist() == [0.0] * 5


def test_landscape_two_equal_tents_at_crossing():
    d = diag([(0.0, 2.0), (1.0, 3.0)])
    g = CurveGrid(start=0.0, end=3.0, knots=7)  # step 0.5, knot 3 = 1.5
    fv = landscape(d, g, levels=2)
    assert fv.values[3] == pytest.approx(0.5)
    assert fv.values[7 + 3] == pytest.approx(0.5)


def test_landscape_peak_is_half_persistence():
    d = diag([(1.0, 3.0)])
    g = CurveGrid(start=0.0, end=4.0, knots=5)  # contains midpoint 2.0
    fv = landscape(d, g, levels=1)
    assert fv.values.max() == pytest.approx((3.0 - 1.0) / 2.0)


def test_entropy_examples():
    g = CurveGrid(start=0.0, end=4.0, knots=5)
    single = entropy_curve(diag([(0.0, 2.0)]), g)
    assert single.values[1] == pytest.approx(0.0)  # eps=1: one bar, p=1
    double = entropy_curve(diag([(0.0, 2.0), (0.0, 2.0)]), g)
    assert double.values[1] == pytest.approx(math.log(2.0))
    assert single.values[3] == 0.0  # eps=3: nothing alive
    assert entropy_curve(diag([]), g).values.tolist() == [0.0] * 5


def test_scalar_entropy():
    assert persistence_entropy(diag([(0.0, 2.0)])) == 0.0
    n = 5
    d = diag([(0.0, 2.0)] * n)
    assert persistence_entropy(d) == pytest.approx(math.log(n))
    assert persistence_entropy(diag([])) == 0.0


def random_diagram(rng, max_pairs=100):
    n = int(rng.integers(0, max_pairs + 1))
    births = rng.uniform(0, 5, size=n)
    deaths = births + rng.uniform(1e-6, 5, size=n)
    pairs = list(zip(births, deaths))
    for _ in range(int(rng.integers(0, 3))):
        pairs.append((float(rng.uniform(0, 5)), math.inf))
    return diag(pairs)


def test_oracle_equivalence_on_random_diagrams():
    rng = np.random.default_rng(41)
    g = CurveGrid(start=0.0, end=6.0, knots=25)
    eps = g.values()
    for _ in range(100):
        d = random_diagram(rng)
        pairs = [(p.birth, p.death) for p in d.pairs]
        bc = betti_curve(d, g).values
        pc = persistence_curve(d, g).values
        ec = entropy_curve(d, g).values
        ls = landscape(d, g, levels=3).values
        for k, e in enumerate(eps):
            assert bc[k] == betti_at(pairs, e)
            assert pc[k] == pytest.approx(persistence_at(pairs, e, g.end), abs=1e-12)
            assert ec[k] == pytest.approx(entropy_at(pairs, e, g.end), abs=1e-12)
            for level in (1, 2, 3):
                assert ls[(level - 1) * g.knots + k] == pytest.approx(
                    landscape_at(pairs, e, g.end, level), abs=1e-12
                )


def test_landscape_levels_are_monotone():
    rng = np.random.default_rng(43)
    g = CurveGrid(start=0.0, end=6.0, knots=20)
    for _ in range(50):
        d = random_diagram(rng, max_pairs=30)
        ls = landscape(d, g, levels=4).values.reshape(4, -1)
        for level in range(3):
            assert np.all(ls[level] >= ls[level + 1])
        assert np.all(ls >= 0)


def test_vectorizations_are_permutation_invariant():
    rng = np.random.default_rng(47)
    g = CurveGrid(start=0.0, end=6.0, knots=15)
    pairs = [(float(b), float(b + p)) for b, p in rng.uniform(0.1, 3, size=(20, 2))]
    shuffled = list(pairs)
    rng.shuffle(shuffled)
    for fn in (betti_curve, persistence_curve, entropy_curve):
        assert np.array_equal(fn(diag(pairs), g).values, fn(diag(shuffled), g).values)
    assert np.array_equal(
        landscape(diag(pairs), g, 2).values, landscape(diag(shuffled), g, 2).values
    )


def test_adding_a_pair_never_decreases_betti():
    rng = np.random.default_rng(53)
    g = CurveGrid(start=0.0, end=6.0, knots=15)
    for _ in range(30):
        d = random_diagram(rng, max_pairs=20)
        base = betti_curve(d, g).values
        extra = diag([(p.birth, p.death) for p in d.pairs] + [(1.0, 4.0)])
        assert np.all(betti_curve(extra, g).values >= base)
