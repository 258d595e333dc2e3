import logging
import typing
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from plc.engine.configuration import Configuration
from plc.oracles import IncidenceBoundViolation
from plc.oracles.grid import GridSpec, PencilGrid, family_intersection_count, random_grid_spec
from plc.utils.math import fraction_at_least_sqrt_scaled


__all__ = [
    "DEFAULT_INCIDENCE_CONSTANT",
    "IncidenceSample",
    "IncidenceBoundReport",
    "incidence_bound_report",
    "random_incidence_samples",
    "pencil_grid"
]


logger = logging.getLogger(__name__)

# case (1) of the counting argument gives |P| >= (N - 2) k^2 / 13
DEFAULT_INCIDENCE_CONSTANT = Fraction(1, 13)


@dataclass(frozen=True)
class IncidenceSample:
    index: int
    N: int
    k: int
    points: int
    ratio: float
    passes: bool


@dataclass(frozen=True)
class IncidenceBoundReport:
    c: Fraction
    samples: typing.Tuple[IncidenceSample, ...]
    min_ratio: float
    median_ratio: float

    def as_dict(self) -> dict:
        return {
            "c": str(self.c),
            "min_ratio": self.min_ratio,
            "median_ratio": self.median_ratio,
            "samples": [vars(s) for s in self.samples]
        }


def incidence_bound_report(samples: typing.Sequence[GridSpec or PencilGrid],
                           c: Fraction = DEFAULT_INCIDENCE_CONSTANT, range_reading: str = "N",
                           enforce: bool = True) -> IncidenceBoundReport:
    r"""
    Evaluates :math:`|P| / (k^2 N^{1/2})` for each sample and compares it with ``c``. The comparison is exact
    (squares of rationals); the reported ratios are floating approximations.

    Raises
    ======
    IncidenceBoundViolation
      If ``enforce`` and any sample has ratio below ``c``
    """
    c = Fraction(c)
    if not samples:
        raise ValueError("incidence_bound_report needs at least one sample")
    rows = []
    for idx, g in enumerate(samples):
        N, k = g.N, g.k
        if N < 4 or k < 2:
            raise ValueError(f"Sample {idx} has N={N}, k={k}; the bound needs N >= 4 families of k >= 2 lines")
        count = family_intersection_count(g, range_reading=range_reading)
        passes = fraction_at_least_sqrt_scaled(Fraction(count), c * k * k, Fraction(N))
        rows.append(IncidenceSample(idx, N, k, count, count / (k * k * float(np.sqrt(N))), passes))
    ratios = np.array([r.ratio for r in rows])
    report = IncidenceBoundReport(c, tuple(rows), float(ratios.min()), float(np.median(ratios)))
    logger.info(f"Incidence bound: {len(rows)} samples, min ratio {report.min_ratio:.6f}, "
                f"median {report.median_ratio:.6f}, c = {c}")
    failing = [r for r in rows if not r.passes]
    if failing and enforce:
        raise IncidenceBoundViolation(failing)
    return report


def random_incidence_samples(count: int, seed: int, families: typing.Tuple[int, int] = (4, 8),
                             lines: typing.Tuple[int, int] = (2, 5)) -> typing.List[GridSpec]:
    """``count`` random grids with N and k drawn uniformly from the inclusive ranges"""
    rng = np.random.default_rng(seed)
    return [random_grid_spec(int(rng.integers(families[0], families[1] + 1)),
                             int(rng.integers(lines[0], lines[1] + 1)), rng) for _ in range(count)]


def pencil_grid(c: Configuration, point_index: int = None) -> typing.Optional[PencilGrid]:
    """
    The degree-growth grid around a point ``p``. Take the line through ``p`` carrying the most points as the axis.
    Every other point ``q`` on the axis contributes the family of the ``delta - 1`` lowest-index lines through
    ``q``, excluding the axis. Returns ``None`` when the axis has fewer than two points besides ``p``.
    """
    point_degrees = [len(x) for x in c.point_lines]
    delta = min(point_degrees)
    if point_index is None:
        point_index = point_degrees.index(delta)
    axis_index = max(c.point_lines[point_index], key=lambda j: (len(c.line_points[j]), -j))
    centres = [i for i in c.line_points[axis_index] if i != point_index]
    if len(centres) < 2 or delta < 3:
        return None
    families = []
    for q in centres:
        through_q = [j for j in c.point_lines[q] if j != axis_index][:delta - 1]
        families.append(tuple(c.lines[j] for j in through_q))
    return PencilGrid(axis=c.lines[axis_index], families=tuple(families))
