import csv
import json
import logging
import os
import typing

from plc.bounds.report import BoundsReport
from plc.bounds.stage_bounds import degree_recurrence_bound
from plc.engine.configuration import StageStats


__all__ = [
    "STATS_COLUMNS",
    "stats_rows",
    "write_stats_csv",
    "write_bounds_json"
]


logger = logging.getLogger(__name__)

STATS_COLUMNS = ["k", "n_k", "m_k", "delta_k", "Delta_k", "deltabar_k", "Deltabar_k", "parallel_pairs_skipped",
                 "max_coord_bits", "thm4_bound", "intersect_ms", "connect_ms"]


def stats_rows(stats: typing.Sequence[StageStats], omit_timings: bool = False) -> typing.List[typing.List[str]]:
    """
    One row per stage in :data:`STATS_COLUMNS` order. ``thm4_bound`` is the minimum degree guaranteed by the previous
    stage and is blank on the first row; timings are blank when ``omit_timings`` is set.
    """
    rows = []
    for idx, s in enumerate(stats):
        bound = "" if idx == 0 else str(degree_recurrence_bound(stats[idx - 1]))
        timings = ["", ""] if omit_timings else [f"{s.intersect_ms:.3f}", f"{s.connect_ms:.3f}"]
        rows.append([str(v) for v in (s.k, s.n, s.m, s.delta, s.Delta, s.deltabar, s.Deltabar, s.parallel_pairs,
                                      s.max_coord_bits)] + [bound] + timings)
    return rows


def write_stats_csv(stats: typing.Sequence[StageStats], file_name: str, omit_timings: bool = False) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(file_name)), exist_ok=True)
    with open(file_name, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(STATS_COLUMNS)
        writer.writerows(stats_rows(stats, omit_timings))
    logger.info(f"Wrote {len(stats)} stage row(s) to {file_name}")
    return file_name


def write_bounds_json(report: BoundsReport, file_name: str) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(file_name)), exist_ok=True)
    with open(file_name, "w") as f:
        json.dump(report.as_dict(), f, indent=2)
        f.write("\n")
    logger.info(f"Wrote bounds report to {file_name}")
    return file_name
