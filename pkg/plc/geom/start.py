import itertools
import typing
from dataclasses import dataclass
from fractions import Fraction

from plc.geom.incidence import line_through, are_parallel
from plc.geom.triple import PointTriple, LineTriple


__all__ = [
    "StartConfig",
    "StartViolation",
    "CANONICAL_START",
    "validate_start"
]


@dataclass(frozen=True)
class StartConfig:
    """Four affine start points with exact rational coordinates"""
    points: typing.Tuple[typing.Tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if len(self.points) != 4:
            raise ValueError(f"A start configuration needs exactly 4 points, got {len(self.points)}")
        object.__setattr__(self, "points", tuple((Fraction(x), Fraction(y)) for x, y in self.points))

    @classmethod
    def from_pairs(cls, pairs: typing.Iterable[typing.Tuple[Fraction or int or str, Fraction or int or str]]):
        return cls(tuple((Fraction(x), Fraction(y)) for x, y in pairs))

    def point_triples(self) -> typing.List[PointTriple]:
        return [PointTriple.from_affine(x, y) for x, y in self.points]

    def __str__(self):
        return "; ".join(f"{x},{y}" for x, y in self.points)


@dataclass(frozen=True)
class StartViolation:
    kind: str  # "coincident", "collinear" or "parallel"
    members: tuple
    detail: str


CANONICAL_START = StartConfig.from_pairs([(0, 0), (1, 0), (0, 1), (5, 7)])


def validate_start(cfg: StartConfig) -> typing.List[StartViolation]:
    """
    Checks the general-position requirements of a start configuration: no two points coincide, no three points are
    collinear and no two of the six connecting lines are parallel.

    Returns
    =======
    typing.List[StartViolation]
        One entry per violating pair or triple; empty when the configuration is valid
    """
    violations = []
    pts = cfg.point_triples()

    for i, j in itertools.combinations(range(4), 2):
        if pts[i] == pts[j]:
            violations.append(StartViolation("coincident", (i, j), f"points {i} and {j} coincide"))
    if violations:
        return violations

    lines: typing.Dict[typing.Tuple[int, int], LineTriple] = {
        (i, j): line_through(pts[i], pts[j]) for i, j in itertools.combinations(range(4), 2)
    }

    for i, j, k in itertools.combinations(range(4), 3):
        if lines[(i, j)] == lines[(i, k)]:
            violations.append(StartViolation("collinear", (i, j, k),
                                             f"points {i}, {j}, {k} lie on the line {lines[(i, j)].as_tuple()}"))

    for pair_1, pair_2 in itertools.combinations(sorted(lines), 2):
        if are_parallel(lines[pair_1], lines[pair_2]):
            violations.append(StartViolation("parallel", (pair_1, pair_2),
                                             f"line through {pair_1} is parallel to line through {pair_2}"))

    return violations
