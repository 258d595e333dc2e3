import enum
import typing
from dataclasses import dataclass, field

from plc.engine import InconsistentConfiguration
from plc.geom.incidence import incident, dual
from plc.geom.start import StartConfig
from plc.geom.triple import PointTriple, LineTriple


__all__ = [
    "ParallelPolicy",
    "Budget",
    "StageStats",
    "Configuration"
]


class ParallelPolicy(str, enum.Enum):
    ERROR = "error"
    SKIP = "skip"
    PROJECTIVE = "projective"


@dataclass(frozen=True)
class Budget:
    """Hard caps for a run; ``None`` disables a cap"""
    max_points: int = None
    max_lines: int = None
    max_bits: int = None

    def __post_init__(self):
        for name in ("max_points", "max_lines", "max_bits"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"Budget {name} must be positive, got {value}")


@dataclass(frozen=True)
class StageStats:
    k: int
    n: int
    m: int
    delta: int
    Delta: int
    deltabar: int
    Deltabar: int
    parallel_pairs: int = 0
    max_coord_bits: int = 0
    intersect_ms: float = 0.0
    connect_ms: float = 0.0
    concurrent_new_points: int = 0


@dataclass(frozen=True)
class Configuration:
    """
    The pair :math:`(P_k, L_k)` with its incidence structure.

    ``point_lines[i]`` holds the sorted indices of the lines through ``points[i]`` and ``line_points[j]`` the sorted
    indices of the points on ``lines[j]``. ``fresh_points`` and ``fresh_lines`` are the indices of the first point
    and line added by the most recent intersection and connection steps; everything from those indices on is
    "fresh" and takes part in the next incremental pair scan.
    """
    k: int
    points: typing.Tuple[PointTriple, ...]
    lines: typing.Tuple[LineTriple, ...]
    point_lines: typing.Tuple[typing.Tuple[int, ...], ...]
    line_points: typing.Tuple[typing.Tuple[int, ...], ...]
    fresh_points: int = 0
    fresh_lines: int = 0
    policy: ParallelPolicy = ParallelPolicy.SKIP
    start: StartConfig = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.lines)

    def point_set(self) -> typing.FrozenSet[PointTriple]:
        return frozenset(self.points)

    def line_set(self) -> typing.FrozenSet[LineTriple]:
        return frozenset(self.lines)

    def point_degree(self, i: int) -> int:
        return len(self.point_lines[i])

    def line_degree(self, j: int) -> int:
        return len(self.line_points[j])

    def dual(self) -> "Configuration":
        """Points become lines and lines become points; incidence and freshness markers swap with them"""
        return Configuration(
            k=self.k,
            points=tuple(dual(line) for line in self.lines),
            lines=tuple(dual(p) for p in self.points),
            point_lines=self.line_points,
            line_points=self.point_lines,
            fresh_points=self.fresh_lines,
            fresh_lines=self.fresh_points,
            policy=self.policy,
            start=self.start
        )

    def check_consistency(self, verify_incidence: bool = True):
        """
        Raises :class:`InconsistentConfiguration` if triples repeat, the two incidence lists disagree, an incidence
        entry fails the dot-product test, a line carries fewer than two points or a point lies on fewer than two
        lines.
        """
        if len(set(self.points)) != len(self.points):
            raise InconsistentConfiguration("Duplicate points in configuration")
        if len(set(self.lines)) != len(self.lines):
            raise InconsistentConfiguration("Duplicate lines in configuration")
        if len(self.point_lines) != self.n or len(self.line_points) != self.m:
            raise InconsistentConfiguration("Incidence lists do not match the point and line counts")
        pairs_from_points = {(i, j) for i, js in enumerate(self.point_lines) for j in js}
        pairs_from_lines = {(i, j) for j, is_ in enumerate(self.line_points) for i in is_}
        if pairs_from_points != pairs_from_lines:
            raise InconsistentConfiguration("Point and line incidence lists disagree")
        for j, is_ in enumerate(self.line_points):
            if len(is_) < 2:
                raise InconsistentConfiguration(f"Line {self.lines[j].as_tuple()} carries {len(is_)} point(s)")
            if list(is_) != sorted(is_):
                raise InconsistentConfiguration(f"Incidence list of line {j} is not sorted")
        for i, js in enumerate(self.point_lines):
            if len(js) < 2:
                raise InconsistentConfiguration(f"Point {self.points[i].as_tuple()} lies on {len(js)} line(s)")
        if verify_incidence:
            for i, j in pairs_from_points:
                if not incident(self.points[i], self.lines[j]):
                    raise InconsistentConfiguration(f"Point {self.points[i].as_tuple()} is not on line "
                                                    f"{self.lines[j].as_tuple()}")
