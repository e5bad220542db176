"""Gelfand-Tsetlin patterns: validation, weight, areas, and enumeration.

A pattern is a triangular array of non-increasing integer rows, row j of
length j (top row first), with each row interlacing the next.  The two
quadratic functionals on an interlaced pair (hi, lo) of lengths n, n-1 are

    area     = sum_i   (hi_i - lo_i) * (lo_i - hi_{i+1})
    traparea = sum_{i<=j} (hi_i - lo_i) * (lo_j - hi_{j+1})

and a pattern's area / trapezoidal area is the sum of the pair values over
consecutive rows (the single-row pair contributes nothing).
"""

from __future__ import annotations

import operator
from functools import cached_property
from typing import Iterator, Sequence

from .errors import ContractViolation
from .seqcore import interlaces, is_non_increasing


def diagnose(rows: Sequence[Sequence[int]]) -> str | None:
    """None if ``rows`` form a valid pattern, else a message naming the
    first violated constraint (1-based row and entry indices)."""
    if len(rows) == 0:
        return "a pattern needs at least one row"
    for j, row in enumerate(rows, start=1):
        if len(row) != j:
            return f"row {j} has length {len(row)}; expected {j}"
        if not is_non_increasing(row):
            return f"row {j} is not non-increasing"
    for j in range(1, len(rows)):
        hi, lo = rows[j], rows[j - 1]
        for i in range(len(lo)):
            if lo[i] > hi[i]:
                return f"row {j} entry {i + 1} exceeds row {j + 1} entry {i + 1}"
            if hi[i + 1] > lo[i]:
                return f"row {j + 1} entry {i + 2} exceeds row {j} entry {i + 1}"
    return None


class GTPattern:
    """Immutable validated pattern; functionals are cached lazily."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(operator.index(v) for v in row) for row in rows)
        problem = diagnose(rows)
        if problem is not None:
            raise ContractViolation("pattern", problem)
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def bounding(self) -> tuple[int, ...]:
        return self.rows[-1]

    @cached_property
    def weight(self) -> tuple[int, ...]:
        """Successive row-sum differences, the zeroth row summing to 0."""
        out = []
        prev = 0
        for row in self.rows:
            s = sum(row)
            out.append(s - prev)
            prev = s
        return tuple(out)

    @cached_property
    def area(self) -> int:
        total = 0
        for j in range(1, self.n):
            hi, lo = self.rows[j], self.rows[j - 1]
            total += sum((hi[i] - lo[i]) * (lo[i] - hi[i + 1]) for i in range(len(lo)))
        return total

    @cached_property
    def traparea(self) -> int:
        total = 0
        for j in range(1, self.n):
            hi, lo = self.rows[j], self.rows[j - 1]
            m = len(lo)
            total += sum(
                (hi[i] - lo[i]) * (lo[h] - hi[h + 1])
                for i in range(m)
                for h in range(i, m)
            )
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, GTPattern) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"GTPattern{self.rows}"


def _require_interlaced(hi: Sequence[int], lo: Sequence[int]) -> None:
    if not interlaces(lo, hi):
        raise ContractViolation(
            "interlacing", f"{tuple(lo)} does not interlace {tuple(hi)}"
        )


def area_pair(hi: Sequence[int], lo: Sequence[int]) -> int:
    """Triangular area of an interlaced pair; 0 when ``lo`` is empty."""
    _require_interlaced(hi, lo)
    return sum((hi[i] - lo[i]) * (lo[i] - hi[i + 1]) for i in range(len(lo)))


def traparea_pair(hi: Sequence[int], lo: Sequence[int]) -> int:
    """Trapezoidal area of an interlaced pair; 0 when ``lo`` is empty."""
    _require_interlaced(hi, lo)
    m = len(lo)
    return sum(
        (hi[i] - lo[i]) * (lo[j] - hi[j + 1]) for i in range(m) for j in range(i, m)
    )


def _rows_below(hi: Sequence[int], target: int | None) -> Iterator[tuple[int, ...]]:
    """All rows of length len(hi)-1 interlacing ``hi``, descending
    lexicographic; with ``target`` set, only rows with that exact sum."""
    m = len(hi) - 1
    lo_min = [0] * (m + 1)
    lo_max = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        lo_min[i] = lo_min[i + 1] + hi[i + 1]
        lo_max[i] = lo_max[i + 1] + hi[i]
    out = [0] * m

    def rec(i: int, remaining: int | None):
        if i == m:
            yield tuple(out)
            return
        top, bottom = hi[i], hi[i + 1]
        for v in range(top, bottom - 1, -1):
            if remaining is not None:
                rest = remaining - v
                if rest < lo_min[i + 1] or rest > lo_max[i + 1]:
                    continue
            else:
                rest = None
            out[i] = v
            yield from rec(i + 1, rest)

    yield from rec(0, target)


def enumerate_patterns(
    bounding: Sequence[int], weight: Sequence[int] | None = None
) -> Iterator[GTPattern]:
    """All integral patterns with the given bounding row, each exactly once.

    With ``weight`` given, only patterns of that weight are produced (row
    sums are pinned to the weight's partial sums, which prunes the
    recursion).  Order: rows are generated from the bounding row downward,
    each row ranging in descending lexicographic order, depth-first.
    """
    bounding = tuple(int(v) for v in bounding)
    if not is_non_increasing(bounding):
        raise ContractViolation(
            "non_increasing", f"bounding sequence must be non-increasing, got {bounding}"
        )
    n = len(bounding)
    if n == 0:
        raise ContractViolation("length", "bounding sequence must be non-empty")
    targets: list[int | None] = [None] * (n + 1)
    if weight is not None:
        weight = tuple(int(v) for v in weight)
        if len(weight) != n:
            raise ContractViolation(
                "length", f"weight must have length {n}, got {len(weight)}"
            )
        if sum(weight) != sum(bounding):
            return
        acc = 0
        for j in range(1, n + 1):
            acc += weight[j - 1]
            targets[j] = acc

    def build(rows_desc: list[tuple[int, ...]]) -> Iterator[GTPattern]:
        cur = rows_desc[-1]
        if len(cur) == 1:
            yield GTPattern(tuple(reversed(rows_desc)))
            return
        for lo in _rows_below(cur, targets[len(cur) - 1]):
            rows_desc.append(lo)
            yield from build(rows_desc)
            rows_desc.pop()

    yield from build([bounding])
