import typing


def count_candidate_pairs(total: int, fresh_from: int) -> int:
    """Number of index pairs ``i < j < total`` with ``j >= fresh_from``"""
    fresh_from = max(fresh_from, 0)
    return (total * (total - 1) - fresh_from * (fresh_from - 1)) // 2 if total > fresh_from else 0


def candidate_pairs(total: int, fresh_from: int, j_start: int = None, j_end: int = None):
    """
    Yields every index pair ``(i, j)`` with ``i < j`` whose larger index is fresh (``j >= fresh_from``), restricted to
    ``j_start <= j < j_end``. Any pair with at least one fresh member has a fresh larger index, so this enumerates
    exactly the pairs not examined in earlier stages.
    """
    j_start = max(fresh_from, 0 if j_start is None else j_start)
    j_end = total if j_end is None else min(j_end, total)
    for j in range(j_start, j_end):
        for i in range(j):
            yield i, j


def split_pair_range(total: int, fresh_from: int, n_chunks: int) -> typing.List[typing.Tuple[int, int]]:
    """
    Splits the ``j`` range of :func:`candidate_pairs` into at most ``n_chunks`` contiguous ``(j_start, j_end)`` blocks
    holding roughly equal numbers of pairs (block ``j`` contributes ``j`` pairs).
    """
    fresh_from = max(fresh_from, 0)
    if total <= fresh_from:
        return []
    target = max(count_candidate_pairs(total, fresh_from) // max(n_chunks, 1), 1)
    chunks = []
    start, acc = fresh_from, 0
    for j in range(fresh_from, total):
        acc += j
        if acc >= target:
            chunks.append((start, j + 1))
            start, acc = j + 1, 0
    if start < total:
        chunks.append((start, total))
    return chunks
