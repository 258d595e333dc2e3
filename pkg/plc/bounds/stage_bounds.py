import logging
import typing
from dataclasses import dataclass

from plc.bounds import TheoremViolation
from plc.engine.configuration import Configuration, StageStats
from plc.geom.incidence import line_degree_cover
from plc.utils.math import nchoosek, below_tower_of_four


__all__ = [
    "BoundsRow",
    "degree_recurrence_bound",
    "check_stage_bounds",
    "check_single_stage",
    "two_line_cover_free"
]


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundsRow:
    """
    Outcome of the constant-free checks for one stage. Consecutive-stage fields are ``None`` on the first row.
    ``trivial_upper_ok`` maps each of the four trivial upper bounds to its outcome.
    """
    k: int
    prop1_ok: typing.Optional[bool]
    prop2_ok: bool
    thm4_ok: typing.Optional[bool]
    thm4_bound: typing.Optional[int]
    trivial_upper_ok: typing.Optional[typing.Dict[str, bool]]
    envelope_ok: bool

    def failures(self) -> typing.List[str]:
        failed = []
        if self.prop1_ok is False:
            failed.append("prop1")
        if not self.prop2_ok:
            failed.append("prop2")
        if self.thm4_ok is False:
            failed.append("thm4")
        for name, ok in (self.trivial_upper_ok or {}).items():
            if not ok:
                failed.append(name)
        if not self.envelope_ok:
            failed.append("upper_envelope")
        return failed


def degree_recurrence_bound(prev: StageStats) -> int:
    r""":math:`\min \{n_k - 1, 2 \delta_k - 3\}`, the guaranteed minimum degree at the next stage"""
    return min(prev.n - 1, 2 * prev.delta - 3)


def _trivial_upper(prev: StageStats, cur: StageStats) -> typing.Dict[str, bool]:
    # the fourth-power bounds are compared as 8 n_{k+1} < n_k^4 to stay in integers
    return {
        "points_from_lines": cur.n <= nchoosek(prev.m, 2),
        "lines_from_points": cur.m <= nchoosek(cur.n, 2),
        "points_fourth_power": 8 * cur.n < prev.n ** 4,
        "lines_fourth_power": 8 * cur.m < prev.m ** 4
    }


_DETAILS = {
    "prop1": "n_{k+1} >= n_k + 1",
    "prop2": "delta_k >= 3",
    "thm4": "delta_{k+1} >= min(n_k - 1, 2 delta_k - 3)",
    "points_from_lines": "n_{k+1} <= C(m_k, 2)",
    "lines_from_points": "m_{k+1} <= C(n_{k+1}, 2)",
    "points_fourth_power": "n_{k+1} < n_k^4 / 8",
    "lines_fourth_power": "m_{k+1} < m_k^4 / 8",
    "upper_envelope": "n_k <= 4^(4^k)"
}


def _raise_first(row: BoundsRow, prev: typing.Optional[StageStats], cur: StageStats, strict: bool):
    failed = row.failures()
    if not failed:
        return
    values = f"n={cur.n}, m={cur.m}, delta={cur.delta}"
    if prev is not None:
        values = f"previous n={prev.n}, m={prev.m}, delta={prev.delta}; current {values}"
    for name in failed:
        logger.error(f"Stage {cur.k}: {_DETAILS[name]} fails ({values})")
    if strict:
        raise TheoremViolation(failed[0], cur.k, f"{_DETAILS[failed[0]]} ({values})")


def check_single_stage(cur: StageStats, strict: bool = True) -> BoundsRow:
    """Checks that need one stage only: the minimum degree and the upper envelope with unit constant"""
    row = BoundsRow(k=cur.k, prop1_ok=None, prop2_ok=cur.delta >= 3, thm4_ok=None, thm4_bound=None,
                    trivial_upper_ok=None, envelope_ok=below_tower_of_four(cur.n, cur.k))
    _raise_first(row, None, cur, strict)
    return row


def check_stage_bounds(prev: typing.Optional[StageStats], cur: StageStats, strict: bool = True) -> BoundsRow:
    """
    Evaluates every constant-free inequality between two consecutive stages with integer arithmetic.

    Parameters
    ==========
    prev: StageStats
      Statistics of stage ``k``, or ``None`` when ``cur`` is the first stage
    cur: StageStats
      Statistics of stage ``k + 1``
    strict: bool
      Raise on the first failed inequality; otherwise failures are only logged and recorded in the row

    Raises
    ======
    TheoremViolation
      Naming the failed inequality and the stage
    """
    if prev is None:
        return check_single_stage(cur, strict)
    if cur.k != prev.k + 1:
        raise ValueError(f"Stages {prev.k} and {cur.k} are not consecutive")
    bound = degree_recurrence_bound(prev)
    row = BoundsRow(
        k=cur.k,
        prop1_ok=cur.n >= prev.n + 1,
        prop2_ok=cur.delta >= 3,
        thm4_ok=cur.delta >= bound,
        thm4_bound=bound,
        trivial_upper_ok=_trivial_upper(prev, cur),
        envelope_ok=below_tower_of_four(cur.n, cur.k)
    )
    _raise_first(row, prev, cur, strict)
    return row


def two_line_cover_free(c: Configuration) -> bool:
    """
    Whether no two lines of the configuration together contain every point. Two lines can only cover the points
    when their degrees sum to at least ``n``, so only such pairs are examined.
    """
    n = c.n
    # a covering pair has d1 + d2 >= n, so its richer line carries at least half the points
    for j1 in (j for j in range(c.m) if 2 * c.line_degree(j) >= n):
        for j2 in range(c.m):
            if j2 == j1 or c.line_degree(j1) + c.line_degree(j2) < n:
                continue
            if line_degree_cover(c.points, c.lines[j1], c.lines[j2]):
                return False
    return True
