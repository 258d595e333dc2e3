import math
import typing
from dataclasses import dataclass
from fractions import Fraction

from plc.geom import ZeroTriple, NonCanonicalTriple


__all__ = [
    "RawTriple",
    "HomogeneousTriple",
    "PointTriple",
    "LineTriple",
    "LINE_AT_INFINITY",
    "canonical",
    "normalize",
    "cross",
    "dot"
]


RawTriple = typing.Tuple[int, int, int]


def canonical(a: int, b: int, c: int) -> RawTriple:
    """
    Canonical representative of the projective class of ``(a, b, c)`` as a plain tuple. The engine workers call
    this directly so that no wrapper objects cross process boundaries.
    """
    g = math.gcd(math.gcd(a, b), c)
    if g == 0:
        raise ZeroTriple("The triple (0, 0, 0) does not represent a projective element")
    if g != 1:
        a, b, c = a // g, b // g, c // g
    if (a or b or c) < 0:
        return -a, -b, -c
    return a, b, c


def cross(u: typing.Sequence[int], v: typing.Sequence[int]) -> RawTriple:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot(u: typing.Sequence[int], v: typing.Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


@dataclass(frozen=True, order=True, slots=True)
class HomogeneousTriple:
    """
    Canonical integer triple ``(a:b:c)``: gcd-reduced with the first nonzero component positive. Equality, hashing
    and ordering are those of the integer components, so two triples are projectively equal exactly when they
    compare equal. Instances are validated on construction; use :meth:`of` to build one from any nonzero triple.
    """
    a: int
    b: int
    c: int

    def __post_init__(self):
        if canonical(self.a, self.b, self.c) != (self.a, self.b, self.c):
            raise NonCanonicalTriple(f"({self.a}, {self.b}, {self.c}) is not in canonical form. Use "
                                     f"{self.__class__.__name__}.of() to normalize it first.")

    @classmethod
    def of(cls, a: int, b: int, c: int):
        return cls(*canonical(a, b, c))

    def as_tuple(self) -> RawTriple:
        return self.a, self.b, self.c

    def bit_length(self) -> int:
        return max(abs(self.a).bit_length(), abs(self.b).bit_length(), abs(self.c).bit_length())

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c


class PointTriple(HomogeneousTriple):
    """A point ``(x:y:z)``; with ``z != 0`` it is the affine point ``(x/z, y/z)``, with ``z == 0`` a point at
    infinity."""
    __slots__ = ()

    @classmethod
    def from_affine(cls, x: Fraction or int, y: Fraction or int) -> "PointTriple":
        x, y = Fraction(x), Fraction(y)
        return cls.of(x.numerator * y.denominator, y.numerator * x.denominator, x.denominator * y.denominator)

    @property
    def is_at_infinity(self) -> bool:
        return self.c == 0

    def affine(self) -> typing.Tuple[Fraction, Fraction]:
        if self.c == 0:
            raise ValueError(f"{self} is a point at infinity and has no affine coordinates")
        return Fraction(self.a, self.c), Fraction(self.b, self.c)


class LineTriple(HomogeneousTriple):
    """The line ``{ax + by + cz = 0}``."""
    __slots__ = ()

    @property
    def is_at_infinity(self) -> bool:
        return self.a == 0 and self.b == 0

    def direction(self) -> "LineTriple":
        """The parallel class of the line, as the canonical triple with the constant term zeroed"""
        return LineTriple.of(self.a, self.b, 0)


LINE_AT_INFINITY = LineTriple(0, 0, 1)


def normalize(a: int, b: int, c: int) -> HomogeneousTriple:
    return HomogeneousTriple.of(a, b, c)
