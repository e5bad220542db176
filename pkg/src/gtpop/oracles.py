"""Independent brute-force references for the verification harness.

Everything here stays deliberately naive (subset quantification, Pascal
recurrences, size-bounded DP) so it can serve as the other side of a
dual-route check against the main implementations.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence


def weakly_interlaces_subsets(hi: Sequence[int], lo: Sequence[int]) -> bool:
    """Subset-quantified weak interlacing: every j-subset sum of ``lo``
    between the top-j prefix and bottom-j suffix sums of ``hi``."""
    n = len(hi)
    for j in range(1, n):
        top = sum(hi[:j])
        bottom = sum(hi[n - j :])
        for idxs in combinations(range(n - 1), j):
            s = sum(lo[i] for i in idxs)
            if not (top >= s >= bottom):
                return False
    return True


def majorization_lower_bounds_hold(x: Sequence[int], y: Sequence[int]) -> bool:
    """For x majorizing y: every k-subset sum of y dominates the k smallest
    entries of x."""
    n = len(x)
    xs = sorted(x)
    for k in range(1, n + 1):
        smallest = sum(xs[:k])
        for idxs in combinations(range(n), k):
            if sum(y[i] for i in idxs) < smallest:
                return False
    return True


@lru_cache(maxsize=None)
def pascal(n: int, k: int) -> int:
    """Binomial coefficient by the Pascal recurrence."""
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return pascal(n - 1, k - 1) + pascal(n - 1, k)


@lru_cache(maxsize=None)
def _p_bounded(n: int, m: int) -> int:
    if n == 0:
        return 1
    if m == 0:
        return 0
    total = _p_bounded(n, m - 1)
    if m <= n:
        total += _p_bounded(n - m, m)
    return total


def partition_count(n: int) -> int:
    """Classical p(n) by the bounded-part recurrence."""
    return _p_bounded(n, n)


def colored_count(r: int, d: int) -> int:
    """Number of r-colored partitions of d: convolution of p(.) r times."""
    counts = [partition_count(i) for i in range(d + 1)]
    acc = [1] + [0] * d
    for _ in range(r):
        nxt = [0] * (d + 1)
        for i, a in enumerate(acc):
            if a:
                for j in range(d + 1 - i):
                    nxt[i + j] += a * counts[j]
        acc = nxt
    return acc[d]


def sl2_pop_count(m: int) -> int:
    """Binomial-sum count of POPs with bounding (m, 0)."""
    return sum(pascal(m, a) for a in range(m + 1))
