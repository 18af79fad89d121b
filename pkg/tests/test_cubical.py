import math

import numpy as np

from gazetda.topology import FiltrationKind, sublevel_cubical_2d

from oracles import flood_fill_components, sublevel_euler_counts


def as_pairs(diagrams):
    return {d.dimension: sorted((p.birth, p.death) for p in d.pairs) for d in diagrams}


def betti_from_diagram(pairs, t):
    return sum(1 for b, d in pairs if b <= t < d)


def test_constant_grid():
    got = as_pairs(sublevel_cubical_2d(np.zeros((4, 5)) + 2.0))
    assert got[0] == [(2.0, math.inf)]
    assert got[1] == []


def test_ring_closes_then_fills():
    grid = np.ones((3, 3))
    grid[0, :] = grid[2, :] = grid[:, 0] = grid[:, 2] = 0.0
    got = as_pairs(sublevel_cubical_2d(grid))
    assert got[0] == [(0.0, math.inf)]
    assert got[1] == [(0.0, 1.0)]
    # Oracle view: at t=0 the border ring is one component with one hole.
    assert flood_fill_components(grid.tolist(), 0.0) == 1
    v, e, f = sublevel_euler_counts(grid.tolist(), 0.0)
    assert v - e + f == 0  # beta0 - beta1 = 1 - 1


def test_two_basins_in_high_plateau():
    grid = np.full((5, 5), 10.0)
    grid[0, 0] = 1.0
    grid[4, 4] = 2.0
    got = as_pairs(sublevel_cubical_2d(grid))
    below_plateau = [(b, d) for b, d in got[0] if b < 10.0]
    assert below_plateau == [(1.0, math.inf), (2.0, 10.0)]


def test_superlevel_matches_negated_sublevel():
    rng = np.random.default_rng(5)
    grid = rng.integers(0, 6, size=(6, 7)).astype(float)
    up = as_pairs(sublevel_cubical_2d(grid, direction="superlevel"))
    down = as_pairs(sublevel_cubical_2d(-grid, direction="sublevel"))
    for dim in (0, 1):
        mapped = sorted(
            (-b, math.inf) if math.isinf(d) else (-d, -b) for b, d in down[dim]
        )
        assert up[dim] == mapped


def test_superlevel_kind_recorded():
    diagrams = sublevel_cubical_2d(np.ones((2, 2)), direction="superlevel")
    assert all(d.filtration_kind == FiltrationKind.SUPERLEVEL_CUBICAL for d in diagrams)


def test_betti_numbers_match_flood_fill_and_euler():
    rng = np.random.default_rng(23)
    for _ in range(60):
        h = int(rng.integers(2, 13))
        w = int(rng.integers(2, 13))
        grid = rng.integers(0, 6, size=(h, w)).astype(float)
        got = as_pairs(sublevel_cubical_2d(grid))
        levels = np.unique(grid)
        thresholds = [(a + b) / 2.0 for a, b in zip(levels[:-1], levels[1:])]
        thresholds += [levels[0] - 1.0, levels[-1] + 1.0]
        for t in thresholds:
            beta0 = betti_from_diagram(got[0], t)
            beta1 = betti_from_diagram(got[1], t)
            assert beta0 == flood_fill_components(grid.tolist(), t)
            v, e, f = sublevel_euler_counts(grid.tolist(), t)
            assert beta0 - beta1 == v - e + f


def test_exactly_one_essential_component():
    rng = np.random.default_rng(29)
    for _ in range(20):
        grid = rng.normal(size=(5, 5))
        got = as_pairs(sublevel_cubical_2d(grid))
        essentials = [p for p in got[0] if math.isinf(p[1])]
        assert len(essentials) == 1
        assert essentials[0][0] == grid.min()
        assert all(math.isfinite(d) for _, d in got[1])
