import itertools
from fractions import Fraction

import numpy as np
import pytest

from plc.geom.incidence import meet, incident, are_parallel
from plc.geom.triple import LineTriple, LINE_AT_INFINITY
from plc.oracles import DegenerateGrid
from plc.oracles.grid import (GridFamily, GridSpec, PencilGrid, arithmetic_grid_spec, random_grid_spec,
                              grid_intersections, grid_cover_min, grid_sumset_cover, family_intersection_count,
                              family_coincidences)

X_DIRECTION = LineTriple(1, 0, 0)
Y_DIRECTION = LineTriple(0, 1, 0)


def test_family_lines():
    family = GridFamily(X_DIRECTION, (Fraction(1, 2), 3))
    assert family.lines() == [LineTriple(2, 0, -1), LineTriple(1, 0, -3)]
    assert family.vector() == (0, 1)


def test_family_validation():
    with pytest.raises(ValueError):
        GridFamily(LineTriple(1, 0, 1), (0, 1))
    with pytest.raises(ValueError):
        GridFamily(X_DIRECTION, (1, 0))
    with pytest.raises(DegenerateGrid):
        GridSpec((GridFamily(X_DIRECTION, (0, 1)), GridFamily(LineTriple(1, 0, 0), (2, 3))))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_arithmetic_grid_cover(n):
    g = arithmetic_grid_spec(n)
    assert len(grid_intersections(g)) == n * n
    assert grid_cover_min(g) == 2 * n - 1
    assert grid_sumset_cover(g) == 2 * n - 1


def test_irregular_grid_cover():
    offsets = (0, 1, 4)
    g = GridSpec((GridFamily(X_DIRECTION, offsets), GridFamily(Y_DIRECTION, offsets)))
    assert grid_cover_min(g) >= 5


@pytest.mark.parametrize("n", [2, 3, 4])
def test_random_grid_cover(n):
    rng = np.random.default_rng(100 + n)
    for _ in range(50):
        g = random_grid_spec(2, n, rng)
        value = grid_cover_min(g)
        assert value >= 2 * n - 1
        assert grid_sumset_cover(g) == value


def test_cover_needs_a_square_two_family_grid():
    with pytest.raises(ValueError):
        grid_cover_min(arithmetic_grid_spec(3, families=3))


def test_grid_as_pencil_grid():
    pg = arithmetic_grid_spec(3, families=3).as_pencil_grid()
    assert pg.axis == LINE_AT_INFINITY
    assert (pg.N, pg.k) == (3, 3)


def test_pencil_grid_validation():
    # two pencils centred at (0, 0) and (1, 0) on the x axis
    axis = LineTriple(0, 1, 0)
    first = (LineTriple(1, 0, 0), LineTriple(1, -1, 0))
    second = (LineTriple(1, 0, -1), LineTriple(1, 1, -1))
    pg = PencilGrid(axis, (first, second))
    assert family_intersection_count(pg) == 4
    with pytest.raises(DegenerateGrid):
        PencilGrid(axis, (first, first[::-1]))
    with pytest.raises(DegenerateGrid):
        PencilGrid(LineTriple(1, 0, 0), (first, second))


def test_two_family_grid_has_no_coincidences():
    g = arithmetic_grid_spec(3)
    assert family_intersection_count(g) == 9
    assert family_coincidences(g) == 0


def test_coincidences_in_arithmetic_grids():
    # x = i, y = j, x + y = t: the last two families meet x = i at the same integer points
    g = arithmetic_grid_spec(3, families=3)
    assert family_intersection_count(g) + family_coincidences(g) == 2 * 9
    assert family_coincidences(g) > 0


def test_range_readings():
    g = arithmetic_grid_spec(2, families=4)
    assert family_intersection_count(g, range_reading="k") <= family_intersection_count(g, range_reading="N")
    with pytest.raises(ValueError):
        family_intersection_count(g, range_reading="all")
    with pytest.raises(ValueError):
        family_intersection_count(g, designated=4)


@pytest.mark.parametrize("seed", range(6))
def test_family_intersection_count_against_all_pair_meets(seed):
    g = random_grid_spec(4, 2, np.random.default_rng(seed))
    lines = [line for family in g.families for line in family.lines()]
    designated = g.families[0].lines()
    # lines of one family are parallel, so every remaining pair spans two families
    meets = {meet(l1, l2) for l1, l2 in itertools.combinations(lines, 2) if not are_parallel(l1, l2)}
    on_designated = {p for p in meets if any(incident(p, line) for line in designated)}
    assert family_intersection_count(g) == len(on_designated)
    assert family_intersection_count(g) + family_coincidences(g) == 3 * 2 ** 2
