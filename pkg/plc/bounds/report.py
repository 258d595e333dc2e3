import logging
import typing
from dataclasses import dataclass

from plc.bounds.bootstrap import exponent_chain
from plc.bounds.degree_lemma import DegreeLemmaRecord, measure_degree_lemma
from plc.bounds.envelope import EnvelopeReport, envelope_report
from plc.bounds.stage_bounds import BoundsRow, check_stage_bounds
from plc.engine.configuration import Configuration, StageStats
from plc.oracles import DegenerateGrid
from plc.oracles.incidence_bound import incidence_bound_report, pencil_grid


__all__ = [
    "PencilIncidenceRecord",
    "BoundsReport",
    "pencil_incidence",
    "build_bounds_report"
]


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PencilIncidenceRecord:
    """Incidence ratio of the degree-growth grid read off one stage configuration"""
    k: int
    N: int
    lines_per_family: int
    points: int
    ratio: float
    passes: bool


@dataclass(frozen=True)
class BoundsReport:
    rows: typing.Tuple[BoundsRow, ...]
    degree_lemma: typing.Tuple[DegreeLemmaRecord, ...]
    envelope: typing.Optional[EnvelopeReport]
    exponent_chain: typing.Tuple[typing.Tuple[str, str], ...]
    incidence: typing.Tuple[PencilIncidenceRecord, ...] = ()

    def as_dict(self) -> dict:
        return {
            "stages": [vars(r) for r in self.rows],
            "degree_lemma": [vars(r) for r in self.degree_lemma],
            "envelope": None if self.envelope is None else self.envelope.as_dict(),
            "exponent_chain": [{"alpha": a, "epsilon": e} for a, e in self.exponent_chain],
            "incidence": [vars(r) for r in self.incidence]
        }


def pencil_incidence(c: Configuration) -> typing.Optional[PencilIncidenceRecord]:
    """
    Reads the degree-growth grid off ``c`` and evaluates the incidence ratio on it without enforcing the bound.
    Returns ``None`` when the grid has fewer than four families.
    """
    try:
        pg = pencil_grid(c)
    except DegenerateGrid as e:
        logger.warning(f"Stage {c.k}: no pencil grid ({e})")
        return None
    if pg is None or pg.N < 4:
        return None
    sample = incidence_bound_report([pg], enforce=False).samples[0]
    return PencilIncidenceRecord(k=c.k, N=sample.N, lines_per_family=sample.k, points=sample.points,
                                 ratio=sample.ratio, passes=sample.passes)


def build_bounds_report(stats: typing.Sequence[StageStats],
                        configurations: typing.Sequence[Configuration] = None,
                        strict: bool = True, chain_steps: int = 3) -> BoundsReport:
    """
    Runs every check and measurement over a run's stages.

    Parameters
    ==========
    stats: typing.Sequence[StageStats]
      Statistics of consecutive stages, first stage first
    configurations: typing.Sequence[Configuration]
      The matching configurations, needed for the per-point degree ratios and the pencil-grid incidence ratios;
      when omitted both are skipped
    strict: bool
      Raise :class:`plc.bounds.TheoremViolation` on the first failed inequality
    chain_steps: int
      Length of the exponent chain echoed in the report
    """
    rows = tuple(check_stage_bounds(prev, cur, strict)
                 for prev, cur in zip([None] + list(stats[:-1]), stats))
    lemma, incidence = (), ()
    if configurations is not None:
        if len(configurations) != len(stats):
            raise ValueError(f"Got {len(configurations)} configurations for {len(stats)} stages")
        lemma = tuple(measure_degree_lemma(prev, cur) for prev, cur in zip(configurations[:-1], configurations[1:]))
        incidence = tuple(r for r in map(pencil_incidence, configurations) if r is not None)
    envelope = envelope_report(stats) if len(stats) >= 2 else None
    chain = tuple((str(a), str(e)) for a, e in exponent_chain(chain_steps))
    logger.info(f"Bounds report over {len(stats)} stage(s): "
                f"{sum(1 for r in rows if not r.failures())} stage(s) pass every check")
    return BoundsReport(rows, lemma, envelope, chain, incidence)
