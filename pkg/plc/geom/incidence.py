import typing

from plc.geom import IdenticalPoints, IdenticalLines
from plc.geom.triple import HomogeneousTriple, PointTriple, LineTriple, cross, dot


__all__ = [
    "line_through",
    "meet",
    "incident",
    "dual",
    "are_parallel",
    "line_degree_cover"
]


def _require(t: HomogeneousTriple, role: type, name: str):
    if not isinstance(t, role):
        raise TypeError(f"{name} must be a {role.__name__}, got {type(t).__name__}")


def line_through(p: PointTriple, q: PointTriple) -> LineTriple:
    """Join of two distinct points. The cross product of two distinct canonical points is never zero."""
    _require(p, PointTriple, "p")
    _require(q, PointTriple, "q")
    if p == q:
        raise IdenticalPoints(f"Cannot join {p} with itself")
    return LineTriple.of(*cross(p.as_tuple(), q.as_tuple()))


def meet(l1: LineTriple, l2: LineTriple) -> PointTriple:
    """Intersection of two distinct lines; the result has third component 0 exactly when the lines are parallel."""
    _require(l1, LineTriple, "l1")
    _require(l2, LineTriple, "l2")
    if l1 == l2:
        raise IdenticalLines(f"Cannot intersect {l1} with itself")
    return PointTriple.of(*cross(l1.as_tuple(), l2.as_tuple()))


def incident(p: PointTriple, line: LineTriple) -> bool:
    _require(p, PointTriple, "p")
    _require(line, LineTriple, "line")
    return dot(p.as_tuple(), line.as_tuple()) == 0


def dual(t: HomogeneousTriple) -> HomogeneousTriple:
    if isinstance(t, PointTriple):
        return LineTriple(t.a, t.b, t.c)
    if isinstance(t, LineTriple):
        return PointTriple(t.a, t.b, t.c)
    raise TypeError(f"Only point or line triples have a dual, got {type(t).__name__}")


def are_parallel(l1: LineTriple, l2: LineTriple) -> bool:
    """Distinct lines with proportional ``(a, b)`` parts"""
    return l1 != l2 and l1.a * l2.b - l1.b * l2.a == 0


def line_degree_cover(points: typing.Iterable[PointTriple], l1: LineTriple, l2: LineTriple) -> bool:
    """True if every point lies on ``l1`` or on ``l2``"""
    return all(incident(p, l1) or incident(p, l2) for p in points)
