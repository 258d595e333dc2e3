import typing
from dataclasses import dataclass
from fractions import Fraction


__all__ = [
    "SumsetInstance",
    "sumset",
    "sumset_size",
    "is_aligned_progression"
]


@dataclass(frozen=True)
class SumsetInstance:
    A: typing.Tuple[Fraction, ...]
    B: typing.Tuple[Fraction, ...]

    def __post_init__(self):
        for name in ("A", "B"):
            values = tuple(Fraction(v) for v in getattr(self, name))
            if len(set(values)) != len(values):
                raise ValueError(f"Set {name} has repeated elements: {[str(v) for v in values]}")
            object.__setattr__(self, name, values)


def sumset(A: typing.Iterable[Fraction], B: typing.Iterable[Fraction]) -> typing.Set[Fraction]:
    B = list(B)
    return {a + b for a in A for b in B}


def sumset_size(inst: SumsetInstance) -> int:
    """:math:`|A+B|` by exhaustive enumeration"""
    if not inst.A or not inst.B:
        raise ValueError("sumset_size requires nonempty A and B")
    return len(sumset(inst.A, inst.B))


def _common_difference(values: typing.Sequence[Fraction]) -> typing.Optional[Fraction]:
    values = sorted(values)
    if len(values) < 2:
        return None
    d = values[1] - values[0]
    if all(b - a == d for a, b in zip(values[:-1], values[1:])):
        return d
    # sorted distinct values give a positive difference, so -1 marks "not a progression"
    return Fraction(-1)


def is_aligned_progression(inst: SumsetInstance) -> bool:
    """Both sets are arithmetic progressions with the same common difference (singletons align with anything)"""
    da, db = _common_difference(inst.A), _common_difference(inst.B)
    if da is not None and da < 0 or db is not None and db < 0:
        return False
    return da is None or db is None or da == db
