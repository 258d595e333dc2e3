import itertools
import logging
import time
import typing
from dataclasses import dataclass, replace

from plc.engine import InvalidStart, ParallelLinesEncountered, BudgetExceeded
from plc.engine.configuration import Configuration, StageStats, ParallelPolicy, Budget
from plc.engine.workers import scan_pairs
from plc.geom.incidence import line_through, meet, are_parallel
from plc.geom.start import StartConfig, validate_start
from plc.geom.triple import PointTriple, LineTriple, RawTriple, canonical, cross, dot


__all__ = [
    "StepReport",
    "init",
    "intersection_step",
    "connection_step",
    "run_stage",
    "naive_stage",
    "dual_stage",
    "degrees",
    "rebuild_incidence"
]


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StepReport:
    parallel_pairs: int = 0
    concurrent_new: int = 0
    max_bits: int = 0
    elapsed_ms: float = 0.0


def _raw_bits(t: RawTriple) -> int:
    return max(abs(t[0]).bit_length(), abs(t[1]).bit_length(), abs(t[2]).bit_length())


def rebuild_incidence(points: typing.Sequence[PointTriple], lines: typing.Sequence[LineTriple],
                      method: str = "scan") -> typing.Tuple[tuple, tuple]:
    """
    Recomputes both incidence lists from scratch.

    ``method="scan"`` tests every point against every line. ``method="pairs"`` joins every pair of points and
    groups the pairs by line; it needs the configuration to be closed under joining (every stage configuration is)
    and raises ``KeyError`` naming the missing join otherwise.
    """
    point_lines = [[] for _ in points]
    line_points = [[] for _ in lines]
    if method == "scan":
        for j, line in enumerate(lines):
            lt = line.as_tuple()
            for i, p in enumerate(points):
                if dot(p.as_tuple(), lt) == 0:
                    point_lines[i].append(j)
                    line_points[j].append(i)
    elif method == "pairs":
        line_index = {line.as_tuple(): j for j, line in enumerate(lines)}
        members: typing.List[typing.Set[int]] = [set() for _ in lines]
        raw = [p.as_tuple() for p in points]
        for i, k in itertools.combinations(range(len(raw)), 2):
            j = line_index[canonical(*cross(raw[i], raw[k]))]
            members[j].add(i)
            members[j].add(k)
        for j, is_ in enumerate(members):
            line_points[j] = sorted(is_)
            for i in line_points[j]:
                point_lines[i].append(j)
    else:
        raise ValueError(f"Unknown incidence rebuild method '{method}'. Must be one of ['scan', 'pairs']")
    return tuple(tuple(x) for x in point_lines), tuple(tuple(x) for x in line_points)


def init(cfg: StartConfig, policy: ParallelPolicy = None) -> Configuration:
    """
    Builds the stage-1 configuration: the four start points and their six connecting lines.

    Coincident or collinear start points are always rejected. Parallel connecting lines are rejected under the
    ``error`` policy and when no policy is given; under an explicit ``skip`` or ``projective`` policy they are only
    logged. Without a policy the configuration runs under ``skip``.
    """
    explicit = policy is not None
    policy = ParallelPolicy(policy) if explicit else ParallelPolicy.SKIP
    violations = validate_start(cfg)
    fatal = [v for v in violations if v.kind != "parallel" or policy == ParallelPolicy.ERROR or not explicit]
    if fatal:
        hint = None
        if not explicit and all(v.kind == "parallel" for v in fatal):
            hint = "Parallel start lines need the 'skip' or 'projective' policy chosen explicitly"
        raise InvalidStart(violations, hint)
    for v in violations:
        logger.warning(f"Start configuration: {v.detail} (continuing under policy '{policy.value}')")

    points = tuple(sorted(cfg.point_triples()))
    lines = tuple(sorted({line_through(p, q) for p, q in itertools.combinations(points, 2)}))
    point_lines, line_points = rebuild_incidence(points, lines, "scan")
    return Configuration(k=1, points=points, lines=lines, point_lines=point_lines, line_points=line_points,
                         fresh_points=0, fresh_lines=0, policy=policy, start=cfg)


def _extend(old_own: tuple, old_other: tuple,
            hits: typing.Dict[RawTriple, typing.Set[int]], new_keys: typing.List[RawTriple]):
    """Appends incidence for newly added elements to both incidence lists"""
    offset = len(old_own)
    own = list(old_own)
    other = [list(x) for x in old_other]
    for idx, key in enumerate(new_keys):
        members = sorted(hits[key])
        own.append(tuple(members))
        for member in members:
            other[member].append(offset + idx)
    return tuple(own), tuple(tuple(x) for x in other)


def _check_budget(kind: str, projected: int, limit: int):
    if limit is not None and projected > limit:
        raise BudgetExceeded(kind, projected, limit)


def _intersect(c: Configuration, policy: ParallelPolicy, budget: Budget,
               workers: int) -> typing.Tuple[Configuration, StepReport]:
    start = time.perf_counter()
    policy = ParallelPolicy(policy)
    scan = scan_pairs([line.as_tuple() for line in c.lines], {p.as_tuple(): i for i, p in enumerate(c.points)},
                      c.fresh_lines, track_parallel=True, keep_infinite=policy == ParallelPolicy.PROJECTIVE,
                      workers=workers)
    if policy == ParallelPolicy.ERROR and scan.first_parallel is not None:
        j, i = scan.first_parallel
        raise ParallelLinesEncountered(c.lines[i], c.lines[j])
    if scan.parallel_pairs and policy == ParallelPolicy.SKIP:
        logger.warning(f"Stage {c.k}: skipped {scan.parallel_pairs} parallel line pair(s)")

    new_keys = sorted(scan.hits)
    max_bits = max((_raw_bits(t) for t in new_keys), default=0)
    budget = budget or Budget()
    _check_budget("points", c.n + len(new_keys), budget.max_points)
    _check_budget("bits", max_bits, budget.max_bits)

    point_lines, line_points = _extend(c.point_lines, c.line_points, scan.hits, new_keys)
    result = replace(c, points=c.points + tuple(PointTriple(*t) for t in new_keys), point_lines=point_lines,
                     line_points=line_points, fresh_points=c.n)
    report = StepReport(parallel_pairs=scan.parallel_pairs,
                        concurrent_new=sum(1 for t in new_keys if len(scan.hits[t]) >= 3),
                        max_bits=max_bits, elapsed_ms=(time.perf_counter() - start) * 1000)
    return result, report


def _connect(c: Configuration, budget: Budget, workers: int) -> typing.Tuple[Configuration, StepReport]:
    start = time.perf_counter()
    scan = scan_pairs([p.as_tuple() for p in c.points], {line.as_tuple(): j for j, line in enumerate(c.lines)},
                      c.fresh_points, workers=workers)
    new_keys = sorted(scan.hits)
    max_bits = max((_raw_bits(t) for t in new_keys), default=0)
    budget = budget or Budget()
    _check_budget("lines", c.m + len(new_keys), budget.max_lines)
    _check_budget("bits", max_bits, budget.max_bits)

    line_points, point_lines = _extend(c.line_points, c.point_lines, scan.hits, new_keys)
    result = replace(c, lines=c.lines + tuple(LineTriple(*t) for t in new_keys), point_lines=point_lines,
                     line_points=line_points, fresh_lines=c.m)
    return result, StepReport(max_bits=max_bits, elapsed_ms=(time.perf_counter() - start) * 1000)


def intersection_step(c: Configuration, policy: ParallelPolicy = None, budget: Budget = None,
                      workers: int = 1) -> Configuration:
    """Adds every meet of a candidate line pair that is not yet a point of the configuration"""
    return _intersect(c, c.policy if policy is None else policy, budget, workers)[0]


def connection_step(c: Configuration, budget: Budget = None, workers: int = 1) -> Configuration:
    """
    Adds the join of every candidate point pair that is not yet a line. Each new line is registered with every
    configuration point on it: a new line can hold at most one point older than the intersection step, so all of
    its points occur in some candidate pair that produced it.
    """
    return _connect(c, budget, workers)[0]


def degrees(c: Configuration) -> StageStats:
    point_degrees = [len(x) for x in c.point_lines]
    line_degrees = [len(x) for x in c.line_points]
    return StageStats(
        k=c.k, n=c.n, m=c.m,
        delta=min(point_degrees, default=0), Delta=max(point_degrees, default=0),
        deltabar=min(line_degrees, default=0), Deltabar=max(line_degrees, default=0),
        max_coord_bits=max((t.bit_length() for t in itertools.chain(c.points, c.lines)), default=0)
    )


def run_stage(c: Configuration, policy: ParallelPolicy = None, budget: Budget = None,
              workers: int = 1) -> typing.Tuple[Configuration, StageStats]:
    """
    Runs stage ``c.k``: the intersection step followed by the connection step.

    Returns
    =======
    typing.Tuple[Configuration, StageStats]
        The stage ``k + 1`` configuration and its statistics. On any error, including a budget overrun, nothing
        is returned and ``c`` is unchanged.
    """
    policy = c.policy if policy is None else ParallelPolicy(policy)
    logger.info(f"Stage {c.k}: n={c.n}, m={c.m}, policy={policy.value}, workers={workers}")
    intersected, report_i = _intersect(replace(c, policy=policy), policy, budget, workers)
    connected, report_c = _connect(intersected, budget, workers)
    result = replace(connected, k=c.k + 1)
    stats = replace(degrees(result), parallel_pairs=report_i.parallel_pairs, intersect_ms=report_i.elapsed_ms,
                    connect_ms=report_c.elapsed_ms, concurrent_new_points=report_i.concurrent_new)
    if report_i.concurrent_new:
        logger.info(f"Stage {c.k}: {report_i.concurrent_new} new point(s) lie on three or more lines")
    logger.info(f"Stage {result.k}: n={result.n}, m={result.m}, delta={stats.delta}, "
                f"time={report_i.elapsed_ms + report_c.elapsed_ms:.0f} ms")
    return result, stats


def naive_stage(c: Configuration, policy: ParallelPolicy = None, budget: Budget = None) -> Configuration:
    """
    Reference stage: meets all line pairs, joins all point pairs of the enlarged point set and rebuilds incidence
    by an exhaustive scan. Used only to check :func:`run_stage`.
    """
    policy = ParallelPolicy(c.policy if policy is None else policy)
    budget = budget or Budget()
    known_points = set(c.points)
    new_points = set()
    for l1, l2 in itertools.combinations(c.lines, 2):
        if are_parallel(l1, l2):
            if policy == ParallelPolicy.ERROR:
                raise ParallelLinesEncountered(l1, l2)
            if policy == ParallelPolicy.SKIP:
                continue
        p = meet(l1, l2)
        if p not in known_points:
            new_points.add(p)
    points = c.points + tuple(sorted(new_points))
    _check_budget("points", len(points), budget.max_points)

    known_lines = set(c.lines)
    new_lines = set()
    for p, q in itertools.combinations(points, 2):
        line = line_through(p, q)
        if line not in known_lines:
            new_lines.add(line)
    lines = c.lines + tuple(sorted(new_lines))
    _check_budget("lines", len(lines), budget.max_lines)
    _check_budget("bits", max((t.bit_length() for t in itertools.chain(new_points, new_lines)), default=0),
                  budget.max_bits)

    point_lines, line_points = rebuild_incidence(points, lines, "scan")
    return Configuration(k=c.k + 1, points=points, lines=lines, point_lines=point_lines, line_points=line_points,
                         fresh_points=c.n, fresh_lines=c.m, policy=policy, start=c.start)


def dual_stage(c: Configuration, policy: ParallelPolicy = None, workers: int = 1) -> Configuration:
    """
    A stage written as intersect, dualise, intersect, dualise. The dual intersection keeps meets at infinity,
    because a join through the origin dualises to a point at infinity.
    """
    intersected = intersection_step(c, policy, workers=workers)
    dual_result = intersection_step(intersected.dual(), ParallelPolicy.PROJECTIVE, workers=workers)
    back = dual_result.dual()
    return replace(back, k=c.k + 1, policy=intersected.policy)
