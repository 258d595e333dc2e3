import logging
import math
import typing
from dataclasses import dataclass

import numpy as np

from plc.bounds import TheoremViolation
from plc.engine.configuration import Configuration


__all__ = [
    "DegreeLemmaRecord",
    "measure_degree_lemma",
    "measured_epsilon"
]


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeLemmaRecord:
    """
    Measured counterparts of the existential constants between stages ``k`` and ``k + 1``. All ratios are floating
    approximations computed from exact degrees and counts.
    """
    k: int
    lemma7_min_ratio: float
    lemma7_argmin: int
    eq6_ratio: float
    epsilon: typing.Optional[float]
    lemma8_ratio: typing.Optional[float]


def measured_epsilon(delta: int, n: int) -> typing.Optional[float]:
    r""":math:`\epsilon_k = \log \delta_k / \log n_k`, the exponent with :math:`\delta_k = n_k^{\epsilon_k}`"""
    if n < 2 or delta < 1:
        return None
    return math.log(delta) / math.log(n)


def measure_degree_lemma(prev: Configuration, cur: Configuration) -> DegreeLemmaRecord:
    r"""
    Parameters
    ==========
    prev: Configuration
      Stage ``k``
    cur: Configuration
      Stage ``k + 1``, grown from ``prev``; the first ``prev.n`` points of ``cur`` are the points of ``prev``

    Returns
    =======
    DegreeLemmaRecord
      The minimum over points of :math:`d_{k+1}(p) (d_k(p) / n_k)^{1/2} / \delta_k`, the ratio
      :math:`n_{k+1} / (\delta_k^{3/2} n_k^{1/2})`, the measured exponent :math:`\epsilon_k` and the ratio
      :math:`\delta_{k+1} / n_k^{(1 + 2\epsilon_k)/3}`

    Raises
    ======
    TheoremViolation
      If a ratio is not strictly positive
    """
    if cur.k != prev.k + 1:
        raise ValueError(f"Stages {prev.k} and {cur.k} are not consecutive")
    if cur.points[:prev.n] != prev.points:
        raise ValueError(f"Stage {cur.k} does not extend the point sequence of stage {prev.k}")

    d_k = np.array([len(x) for x in prev.point_lines], dtype=float)
    d_k1 = np.array([len(x) for x in cur.point_lines[:prev.n]], dtype=float)
    n_k, delta_k = prev.n, int(d_k.min())
    delta_k1 = min(len(x) for x in cur.point_lines)

    ratios = d_k1 * np.sqrt(d_k / n_k) / delta_k
    argmin = int(np.argmin(ratios))
    eq6 = cur.n / (delta_k ** 1.5 * math.sqrt(n_k))
    eps = measured_epsilon(delta_k, n_k)
    lemma8 = None if eps is None else delta_k1 / n_k ** ((1 + 2 * eps) / 3)

    record = DegreeLemmaRecord(k=prev.k, lemma7_min_ratio=float(ratios[argmin]), lemma7_argmin=argmin,
                               eq6_ratio=eq6, epsilon=eps, lemma8_ratio=lemma8)
    for name in ("lemma7_min_ratio", "eq6_ratio", "lemma8_ratio"):
        value = getattr(record, name)
        if value is not None and not value > 0:
            raise TheoremViolation(name, cur.k, f"measured ratio {value} is not positive")
    logger.info(f"Stage {prev.k} -> {cur.k}: lemma7 min ratio {record.lemma7_min_ratio:.6f} at point {argmin}, "
                f"eq6 ratio {eq6:.6f}")
    return record
