"""
Data-parallel scan of index pairs for the intersection and connection steps.

Workers receive the full triple list once (pool initializer) and a block of ``j`` indices; each returns the
canonical triples it produced that are not already known, with the indices that produced them. The merge is a
union of sets, so the result does not depend on how pairs were distributed.
"""
import logging
import multiprocessing
import time
import typing
from dataclasses import dataclass, field

from plc.geom.triple import LINE_AT_INFINITY, RawTriple, canonical, cross
from plc.utils.iteration import candidate_pairs, count_candidate_pairs, split_pair_range


logger = logging.getLogger(__name__)

CHUNKS_PER_WORKER = 4
MIN_PAIRS_FOR_POOL = 20000

_INFINITY = LINE_AT_INFINITY.as_tuple()


@dataclass
class PairScan:
    hits: typing.Dict[RawTriple, typing.Set[int]] = field(default_factory=dict)
    parallel_pairs: int = 0
    first_parallel: typing.Optional[typing.Tuple[int, int]] = None

    def merge(self, other: "PairScan"):
        for t, members in other.hits.items():
            self.hits.setdefault(t, set()).update(members)
        self.parallel_pairs += other.parallel_pairs
        if other.first_parallel is not None:
            if self.first_parallel is None or other.first_parallel < self.first_parallel:
                self.first_parallel = other.first_parallel


@dataclass(frozen=True)
class _ScanContext:
    triples: typing.List[RawTriple]
    known: typing.Dict[RawTriple, int]
    fresh_from: int
    track_parallel: bool
    keep_infinite: bool


_CONTEXT: _ScanContext = None


def _init_worker(context: _ScanContext):
    global _CONTEXT
    _CONTEXT = context


def _scan(context: _ScanContext, bounds: typing.Tuple[int, int]) -> PairScan:
    result = PairScan()
    hits = result.hits
    triples, known = context.triples, context.known
    start = time.perf_counter()
    for i, j in candidate_pairs(len(triples), context.fresh_from, *bounds):
        x, y, z = cross(triples[i], triples[j])
        if z == 0 and context.track_parallel:
            # the line at infinity meets every line there without being parallel to it
            if triples[i] != _INFINITY and triples[j] != _INFINITY:
                result.parallel_pairs += 1
                # pairs are visited in (j, i) order, so the first one seen is the smallest
                if result.first_parallel is None:
                    result.first_parallel = (j, i)
            if not context.keep_infinite:
                continue
        t = canonical(x, y, z)
        if t in known:
            continue
        members = hits.get(t)
        if members is None:
            hits[t] = {i, j}
        else:
            members.add(i)
            members.add(j)
    logger.debug(f"Scanned block {bounds} in {(time.perf_counter() - start) * 1000:.1f} ms, {len(hits)} new triples")
    return result


def _scan_chunk(bounds: typing.Tuple[int, int]) -> PairScan:
    return _scan(_CONTEXT, bounds)


def scan_pairs(triples: typing.List[RawTriple], known: typing.Dict[RawTriple, int], fresh_from: int,
               track_parallel: bool = False, keep_infinite: bool = True, workers: int = 1) -> PairScan:
    """
    Computes the cross product of every candidate pair (at least one index ``>= fresh_from``) and collects the
    canonical results that are not keys of ``known``.

    Parameters
    ==========
    triples: typing.List[RawTriple]
      Canonical lines (intersection step) or points (connection step)
    known: typing.Dict[RawTriple, int]
      Canonical triples already present in the dual role
    fresh_from: int
      First fresh index
    track_parallel: bool
      Count pairs whose cross product has third component zero (parallel lines)
    keep_infinite: bool
      When tracking parallels, whether their meets at infinity are kept as results
    workers: int
      Process count; 1 runs in the calling process

    Returns
    =======
    PairScan
      New triples with the indices that produced them, plus parallel-pair bookkeeping
    """
    context = _ScanContext(triples, known, fresh_from, track_parallel, keep_infinite)
    n_pairs = count_candidate_pairs(len(triples), fresh_from)
    merged = PairScan()
    if workers <= 1 or n_pairs < MIN_PAIRS_FOR_POOL:
        merged.merge(_scan(context, (fresh_from, len(triples))))
        return merged

    chunks = split_pair_range(len(triples), fresh_from, workers * CHUNKS_PER_WORKER)
    logger.debug(f"Scanning {n_pairs} pairs in {len(chunks)} blocks on {workers} workers")
    with multiprocessing.Pool(workers, initializer=_init_worker, initargs=(context,)) as pool:
        for part in pool.map(_scan_chunk, chunks):
            merged.merge(part)
    return merged
