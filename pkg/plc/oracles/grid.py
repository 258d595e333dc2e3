import itertools
import typing
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from plc.geom.incidence import meet, incident
from plc.geom.triple import LineTriple, PointTriple, LINE_AT_INFINITY, canonical
from plc.oracles import DegenerateGrid
from plc.oracles.sumset import SumsetInstance, sumset_size


__all__ = [
    "GridFamily",
    "GridSpec",
    "PencilGrid",
    "arithmetic_grid_spec",
    "random_grid_spec",
    "grid_intersections",
    "grid_cover_min",
    "grid_sumset_cover",
    "family_intersection_count",
    "family_coincidences"
]


@dataclass(frozen=True)
class GridFamily:
    """Parallel lines ``a x + b y = t`` for each offset ``t``, where ``(a, b, 0)`` is the direction triple"""
    direction: LineTriple
    offsets: typing.Tuple[Fraction, ...]

    def __post_init__(self):
        if self.direction.c != 0 or self.direction.is_at_infinity:
            raise ValueError(f"A family direction must have the form (a, b, 0), got {self.direction.as_tuple()}")
        offsets = tuple(Fraction(t) for t in self.offsets)
        if any(t1 >= t2 for t1, t2 in zip(offsets[:-1], offsets[1:])):
            raise ValueError(f"Family offsets must be strictly increasing, got {[str(t) for t in offsets]}")
        object.__setattr__(self, "offsets", offsets)

    def lines(self) -> typing.List[LineTriple]:
        a, b = self.direction.a, self.direction.b
        return [LineTriple.of(a * t.denominator, b * t.denominator, -t.numerator) for t in self.offsets]

    def vector(self) -> typing.Tuple[int, int]:
        """Direction vector of the lines of the family"""
        return canonical(self.direction.b, -self.direction.a, 0)[:2]


@dataclass(frozen=True)
class GridSpec:
    families: typing.Tuple[GridFamily, ...]

    def __post_init__(self):
        if len(self.families) < 2:
            raise ValueError(f"A grid needs at least 2 families, got {len(self.families)}")
        for family in self.families:
            if len(family.offsets) < 2:
                raise ValueError("Every family needs at least 2 lines")
        directions = [f.direction for f in self.families]
        if len(set(directions)) != len(directions):
            raise DegenerateGrid(f"Two families share a direction: {[d.as_tuple() for d in directions]}")

    @property
    def N(self) -> int:
        return len(self.families)

    @property
    def k(self) -> int:
        sizes = {len(f.offsets) for f in self.families}
        if len(sizes) != 1:
            raise ValueError(f"Families have different sizes {sorted(sizes)}")
        return sizes.pop()

    def as_pencil_grid(self) -> "PencilGrid":
        return PencilGrid(axis=LINE_AT_INFINITY, families=tuple(tuple(f.lines()) for f in self.families))


@dataclass(frozen=True)
class PencilGrid:
    """
    Families of lines, each concurrent at a distinct centre on a common axis line. A :class:`GridSpec` is the case
    where the axis is the line at infinity, so that each pencil is a class of parallel lines. Points on the axis
    never count as grid intersections.
    """
    axis: LineTriple
    families: typing.Tuple[typing.Tuple[LineTriple, ...], ...]

    def __post_init__(self):
        if len(self.families) < 2:
            raise ValueError(f"A grid needs at least 2 families, got {len(self.families)}")
        centres = []
        for family in self.families:
            if len(family) < 2 or len(set(family)) != len(family):
                raise ValueError("Every family needs at least 2 distinct lines")
            if self.axis in family:
                raise DegenerateGrid(f"The axis {self.axis.as_tuple()} cannot belong to a family")
            centre = meet(family[0], family[1])
            if not all(incident(centre, line) for line in family) or not incident(centre, self.axis):
                raise DegenerateGrid("Family lines are not concurrent at a point of the axis")
            centres.append(centre)
        if len(set(centres)) != len(centres):
            raise DegenerateGrid("Two families share a centre")

    @property
    def N(self) -> int:
        return len(self.families)

    @property
    def k(self) -> int:
        sizes = {len(f) for f in self.families}
        if len(sizes) != 1:
            raise ValueError(f"Families have different sizes {sorted(sizes)}")
        return sizes.pop()

    def as_pencil_grid(self) -> "PencilGrid":
        return self


def arithmetic_grid_spec(n: int, families: int = 2) -> GridSpec:
    """``families`` families of ``n`` lines at offsets ``0, 1, ..., n - 1``; directions x, y, x + y, x + 2y, ..."""
    directions = [LineTriple(1, 0, 0), LineTriple(0, 1, 0)] + [LineTriple(1, j, 0) for j in range(1, families - 1)]
    return GridSpec(tuple(GridFamily(d, tuple(Fraction(t) for t in range(n))) for d in directions[:families]))


def random_grid_spec(families: int, lines: int, rng: np.random.Generator, max_coefficient: int = 20,
                     max_numerator: int = 50, max_denominator: int = 9) -> GridSpec:
    """Families with random distinct integer directions and random rational offsets"""
    directions = []
    while len(directions) < families:
        a, b = (int(v) for v in rng.integers(-max_coefficient, max_coefficient + 1, size=2))
        if a == 0 and b == 0:
            continue
        d = LineTriple.of(a, b, 0)
        if d not in directions:
            directions.append(d)
    grid_families = []
    for d in directions:
        offsets = set()
        while len(offsets) < lines:
            offsets.add(Fraction(int(rng.integers(-max_numerator, max_numerator + 1)),
                                 int(rng.integers(1, max_denominator + 1))))
        grid_families.append(GridFamily(d, tuple(sorted(offsets))))
    return GridSpec(tuple(grid_families))


def _check_square(g: GridSpec) -> int:
    if g.N != 2:
        raise ValueError(f"Grid covering needs exactly 2 families, got {g.N}")
    n = g.k
    if n < 2:
        raise ValueError(f"Grid covering needs n >= 2, got {n}")
    return n


def grid_intersections(g: GridSpec) -> typing.List[typing.Tuple[Fraction, Fraction]]:
    lines_q, lines_r = g.families[0].lines(), g.families[1].lines()
    return [meet(lq, lr).affine() for lq in lines_q for lr in lines_r]


def _candidate_directions(g: GridSpec, points: typing.List[typing.Tuple[Fraction, Fraction]]):
    excluded = {f.vector() for f in g.families}
    directions = set()
    for (x1, y1), (x2, y2) in itertools.combinations(points, 2):
        dx, dy = x2 - x1, y2 - y1
        den = dx.denominator * dy.denominator
        u, v, _ = canonical(dx.numerator * (den // dx.denominator), dy.numerator * (den // dy.denominator), 0)
        if (u, v) not in excluded:
            directions.add((u, v))
    return sorted(directions)


def _projection(direction: typing.Tuple[int, int], point: typing.Tuple[Fraction, Fraction]) -> Fraction:
    # constant along lines with the given direction vector
    u, v = direction
    return v * point[0] - u * point[1]


def grid_cover_min(g: GridSpec) -> int:
    """
    Minimum number of parallel lines covering all :math:`n^2` intersections of an :math:`n \\times n` grid, over
    covering directions parallel to neither grid family. Directions that collapse no pair of intersections need
    :math:`n^2` lines, so only directions through two intersections are examined.
    """
    n = _check_square(g)
    points = grid_intersections(g)
    best = n * n
    for direction in _candidate_directions(g, points):
        best = min(best, len({_projection(direction, p) for p in points}))
    return best


def grid_sumset_cover(g: GridSpec) -> int:
    """
    The covering number rebuilt from sumsets. For each candidate direction, take one line of each family. A holds
    the projections of the points where the first line meets the second family. B holds the projections of the
    points where the second line meets the first family, shifted by the projection of the common point. The
    result is the minimum of :math:`|A+B|` over the directions.
    """
    n = _check_square(g)
    points = grid_intersections(g)
    lines_q, lines_r = g.families[0].lines(), g.families[1].lines()
    ell_q, ell_r = lines_q[0], lines_r[0]
    q_points = [meet(ell_q, lr).affine() for lr in lines_r]
    r_points = [meet(ell_r, lq).affine() for lq in lines_q]
    common = meet(ell_q, ell_r).affine()
    best = n * n
    for direction in _candidate_directions(g, points):
        shift = _projection(direction, common)
        inst = SumsetInstance(tuple(_projection(direction, q) for q in q_points),
                              tuple(_projection(direction, r) - shift for r in r_points))
        best = min(best, sumset_size(inst))
    return best


def _other_families(pg: PencilGrid, designated: int, range_reading: str) -> typing.List[int]:
    if range_reading == "N":
        return [j for j in range(pg.N) if j != designated]
    if range_reading == "k":
        # families 2..k in one-based order, skipping the designated one
        return [j for j in range(1, min(pg.k, pg.N)) if j != designated]
    raise ValueError(f"range_reading must be 'N' or 'k', got '{range_reading}'")


def family_intersection_count(g: GridSpec or PencilGrid, designated: int = 0, range_reading: str = "N") -> int:
    """
    Number of distinct points lying on a line of the designated family and on a line of another family.
    ``range_reading="k"`` restricts the other families to positions 2 through k.
    """
    pg = g.as_pencil_grid()
    if not 0 <= designated < pg.N:
        raise ValueError(f"Designated family {designated} out of range for {pg.N} families")
    points = set()
    for j in _other_families(pg, designated, range_reading):
        for l1 in pg.families[designated]:
            for l2 in pg.families[j]:
                p: PointTriple = meet(l1, l2)
                if not incident(p, pg.axis):
                    points.add(p)
    return len(points)


def family_coincidences(g: GridSpec or PencilGrid, designated: int = 0, range_reading: str = "N") -> int:
    """How far the count falls below the generic value: one point per line pair, :math:`(N-1)k^2` in total"""
    pg = g.as_pencil_grid()
    generic = sum(len(pg.families[designated]) * len(pg.families[j])
                  for j in _other_families(pg, designated, range_reading))
    return generic - family_intersection_count(pg, designated, range_reading)
