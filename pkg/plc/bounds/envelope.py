import math
import typing
from dataclasses import dataclass
from decimal import Decimal, localcontext

from scipy.stats import linregress

from plc.bounds import TheoremViolation
from plc.engine.configuration import StageStats
from plc.utils.math import log4, below_tower_of_four


__all__ = [
    "EnvelopeRow",
    "EnvelopeFit",
    "EnvelopeReport",
    "growth_band",
    "envelope_report"
]


@dataclass(frozen=True)
class EnvelopeRow:
    k: int
    n: int
    log4_n: float
    loglog4_n: typing.Optional[float]
    upper_ok: bool
    growth_ratio: typing.Optional[float] = None
    growth_exponent: typing.Optional[float] = None
    in_band: typing.Optional[bool] = None


@dataclass(frozen=True)
class EnvelopeFit:
    """Least-squares line :math:`\\log_4 \\log_4 n_k \\approx` ``slope`` :math:`k +` ``intercept``"""
    stages: typing.Tuple[int, ...]
    slope: float
    intercept: float
    base: float


@dataclass(frozen=True)
class EnvelopeReport:
    rows: typing.Tuple[EnvelopeRow, ...]
    band: typing.Tuple[Decimal, Decimal]
    fit: typing.Optional[EnvelopeFit]
    odd_fit: typing.Optional[EnvelopeFit]
    even_fit: typing.Optional[EnvelopeFit]

    def as_dict(self) -> dict:
        def fit_dict(f: EnvelopeFit):
            return None if f is None else vars(f) | {"stages": list(f.stages)}
        return {
            "band": [str(x) for x in self.band],
            "rows": [vars(r) for r in self.rows],
            "fit": fit_dict(self.fit),
            "odd_fit": fit_dict(self.odd_fit),
            "even_fit": fit_dict(self.even_fit)
        }


def growth_band(precision: int = 28) -> typing.Tuple[Decimal, Decimal]:
    """
    The band for the per-stage ratio :math:`\\log n_{k+1} / \\log n_k`: from :math:`\\sqrt{1.1}` (1.0488 rounded)
    to 4, with the lower end computed to ``precision`` significant digits
    """
    with localcontext() as ctx:
        ctx.prec = precision
        return (Decimal(11) / Decimal(10)).sqrt(), Decimal(4)


def _fit(ks: typing.List[int], ys: typing.List[float]) -> typing.Optional[EnvelopeFit]:
    if len(ks) < 2:
        return None
    result = linregress(ks, ys)
    return EnvelopeFit(tuple(ks), float(result.slope), float(result.intercept), 4 ** float(result.slope))


def envelope_report(stats: typing.Sequence[StageStats], precision: int = 28) -> EnvelopeReport:
    """
    Tabulates :math:`\\log_4 n_k` and :math:`\\log_4 \\log_4 n_k`, checks :math:`n_k \\le 4^{4^k}` exactly, and
    reports the growth ratio of each consecutive pair of stages against the band. The fits regress
    :math:`\\log_4 \\log_4 n_k` on ``k`` over all stages past the first and over odd and even stages separately; the
    fitted base ``4 ** slope`` estimates ``b`` in :math:`n_k \\approx 4^{b^k}`.

    Raises
    ======
    TheoremViolation
      If some stage exceeds the upper envelope
    """
    if len(stats) < 2:
        raise ValueError(f"envelope_report needs at least 2 stages, got {len(stats)}")
    lower, upper = growth_band(precision)
    rows = []
    for idx, s in enumerate(stats):
        if not below_tower_of_four(s.n, s.k):
            raise TheoremViolation("upper_envelope", s.k, f"n_k = {s.n} exceeds 4^(4^{s.k})")
        l4 = log4(s.n)
        growth = {}
        if idx > 0:
            ratio = math.log(s.n) / math.log(stats[idx - 1].n)
            growth = dict(growth_ratio=ratio, growth_exponent=math.log(ratio),
                          in_band=lower <= Decimal(ratio) <= upper)
        rows.append(EnvelopeRow(k=s.k, n=s.n, log4_n=l4, loglog4_n=log4(l4) if l4 > 0 else None, upper_ok=True,
                                **growth))

    # log4 log4 n_1 = 0 for the four start points; the fits use every stage with n_k > 4
    usable = [(r.k, r.loglog4_n) for r in rows if r.loglog4_n is not None and r.n > 4]
    ks = [k for k, _ in usable]
    ys = [y for _, y in usable]
    return EnvelopeReport(
        rows=tuple(rows),
        band=(lower, upper),
        fit=_fit(ks, ys),
        odd_fit=_fit([k for k in ks if k % 2], [y for k, y in usable if k % 2]),
        even_fit=_fit([k for k in ks if not k % 2], [y for k, y in usable if not k % 2])
    )
