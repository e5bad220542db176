"""Integer partitions, rectangles, colored partitions, and the breakup maps.

The breakup of a partition along a non-decreasing integer sequence
generalizes the Durfee-square construction (the single-integer case with
c = 0).  Both directions of the breakup are implemented and are exact
two-sided inverses of each other on their stated domains.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import ContractViolation


class Partition:
    """Weakly decreasing tuple of positive parts; zeros are trimmed away."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(operator.index(v) for v in parts)
        for i in range(len(ps) - 1):
            if ps[i] < ps[i + 1]:
                raise ContractViolation(
                    "partition", f"parts must be weakly decreasing, got {ps}"
                )
        if ps and ps[-1] < 0:
            raise ContractViolation(
                "partition", f"parts must be non-negative, got {ps}"
            )
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        self.parts = ps

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def part(self, i: int) -> int:
        """The i-th part (1-based); 0 beyond the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def fits_in(self, rect: "Rectangle") -> bool:
        """At most ``rect.rows`` parts, each at most ``rect.cols``."""
        return self.num_parts <= rect.rows and self.largest <= rect.cols

    def complement(self, rect: "Rectangle") -> "Partition":
        """Complement inside ``rect``: part j becomes cols - part(rows+1-j)."""
        if not self.fits_in(rect):
            raise ContractViolation(
                "rectangle",
                f"{self} does not fit into ({rect.rows}, {rect.cols})",
            )
        return Partition(
            rect.cols - self.part(rect.rows + 1 - j) for j in range(1, rect.rows + 1)
        )

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


EMPTY = Partition()


@dataclass(frozen=True)
class Rectangle:
    """A box with ``rows`` rows and ``cols`` columns, both non-negative."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ContractViolation(
                "rectangle",
                f"rectangle sides must be non-negative, got ({self.rows}, {self.cols})",
            )

    @property
    def area(self) -> int:
        return self.rows * self.cols


@dataclass(frozen=True)
class ColoredPartition:
    """Ordered tuple of partitions; component j holds the parts of color j+1."""

    components: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.components) < 1:
            raise ContractViolation(
                "colored", "a colored partition needs at least one color"
            )

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(p.size for p in self.components)


@dataclass(frozen=True)
class BreakResult:
    """Output of the multi-cut breakup.

    ``pieces[0]`` has at most ``a_seq[0]`` parts (its column bound is
    unbounded), ``pieces[j]`` for 0 < j < t-1 fits the rectangle
    (a_j - a_{j-1}, b_{j-1} - b_j), and ``pieces[-1]`` has largest part at
    most ``b_seq[-1]`` (its row bound is unbounded).
    """

    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]
    pieces: tuple[Partition, ...]

    @property
    def t(self) -> int:
        return len(self.pieces)


def _cut_index(c: int, p: Partition) -> int:
    """Largest a >= 0 with part(a) >= a - c, reading part(0) as infinity."""
    a = max(c, 0)
    while p.part(a + 1) >= (a + 1) - c:
        a += 1
    return a


def break_single(c: int, p: Partition) -> tuple[int, int, Partition, Partition]:
    """Cut ``p`` at the generalized Durfee corner for offset ``c``.

    Returns (a, b, p1, p2) with b = a - c, p1 the first a parts lowered by
    b, and p2 the remaining parts.  Always |p| = a*b + |p1| + |p2|.
    """
    a = _cut_index(c, p)
    b = a - c
    p1 = Partition(p.part(i) - b for i in range(1, a + 1))
    p2 = Partition(p.parts[a:])
    return a, b, p1, p2


def break_single_inv(a: int, b: int, p1: Partition, p2: Partition) -> tuple[int, Partition]:
    """Reassemble (c, p) from a single-cut breakup."""
    if a < 0 or b < 0:
        raise ContractViolation("break_shape", f"a and b must be non-negative, got ({a}, {b})")
    if p1.num_parts > a:
        raise ContractViolation(
            "break_shape", f"first piece has {p1.num_parts} parts, more than a = {a}"
        )
    if p2.largest > b:
        raise ContractViolation(
            "break_shape", f"second piece has largest part {p2.largest}, more than b = {b}"
        )
    parts = [p1.part(i) + b for i in range(1, a + 1)]
    parts.extend(p2.parts)
    return a - b, Partition(parts)


def break_multi(c_seq: Sequence[int], p: Partition) -> BreakResult:
    """Cut ``p`` along a non-decreasing sequence of offsets.

    With t - 1 offsets the partition splits into t pieces; the size
    identity |p| = sum |pieces| + sum_j (a_j - a_{j-1}) * b_j holds exactly.
    A single offset agrees with :func:`break_single`.
    """
    c_seq = tuple(int(c) for c in c_seq)
    if len(c_seq) < 1:
        raise ContractViolation("length", "at least one offset is required")
    for i in range(len(c_seq) - 1):
        if c_seq[i] > c_seq[i + 1]:
            raise ContractViolation(
                "non_decreasing", f"offsets must be non-decreasing, got {c_seq}"
            )
    a_seq = tuple(_cut_index(c, p) for c in c_seq)
    b_seq = tuple(a - c for a, c in zip(a_seq, c_seq))
    t = len(c_seq) + 1
    pieces = []
    prev = 0
    for j in range(t - 1):
        pieces.append(Partition(p.part(k) - b_seq[j] for k in range(prev + 1, a_seq[j] + 1)))
        prev = a_seq[j]
    pieces.append(Partition(p.parts[prev:]))
    return BreakResult(a_seq, b_seq, tuple(pieces))


def _diagnose_break_result(r: BreakResult) -> str | None:
    t = r.t
    if t < 2:
        return f"a breakup has at least two pieces, got {t}"
    if len(r.a_seq) != t - 1 or len(r.b_seq) != t - 1:
        return f"expected {t - 1} cut positions for {t} pieces"
    prev_a = 0
    for a in r.a_seq:
        if a < prev_a:
            return f"cut rows {r.a_seq} are not non-decreasing from 0"
        prev_a = a
    for i in range(len(r.b_seq) - 1):
        if r.b_seq[i] < r.b_seq[i + 1]:
            return f"cut columns {r.b_seq} are not non-increasing"
    if r.b_seq and r.b_seq[-1] < 0:
        return f"cut columns {r.b_seq} must be non-negative"
    prev = 0
    for j, piece in enumerate(r.pieces, start=1):
        if j < t:
            height = r.a_seq[j - 1] - prev
            prev = r.a_seq[j - 1]
            if piece.num_parts > height:
                return f"piece {j} has {piece.num_parts} parts; at most {height} allowed"
        if j > 1:
            width = (r.b_seq[j - 2] - r.b_seq[j - 1]) if j < t else r.b_seq[j - 2]
            if piece.largest > width:
                return f"piece {j} has largest part {piece.largest}; at most {width} allowed"
    return None


def break_multi_inv(r: BreakResult) -> tuple[tuple[int, ...], Partition]:
    """Exact two-sided inverse of :func:`break_multi`."""
    problem = _diagnose_break_result(r)
    if problem is not None:
        raise ContractViolation("break_shape", problem)
    c_seq = tuple(a - b for a, b in zip(r.a_seq, r.b_seq))
    parts = []
    prev = 0
    for j in range(r.t - 1):
        for k in range(1, r.a_seq[j] - prev + 1):
            parts.append(r.pieces[j].part(k) + r.b_seq[j])
        prev = r.a_seq[j]
    parts.extend(r.pieces[-1].parts)
    return c_seq, Partition(parts)


def enumerate_in_box(rect: Rectangle) -> Iterator[Partition]:
    """All partitions fitting ``rect``, each exactly once.

    Order: ascending lexicographic on the part list zero-padded to
    ``rect.rows`` entries, so the empty partition comes first and the full
    box last.  The count is binomial(rows + cols, rows).
    """

    def rec(slots: int, cap: int):
        if slots == 0:
            yield ()
            return
        for first in range(cap + 1):
            for rest in rec(slots - 1, first):
                yield (first,) + rest

    for padded in rec(rect.rows, rect.cols):
        yield Partition(padded)


@lru_cache(maxsize=None)
def box_size_counts(rows: int, cols: int) -> tuple[int, ...]:
    """Counts of partitions in a rows x cols box, indexed by size.

    Computed by the Gaussian-binomial recurrence
    G(a, b) = G(a-1, b) + q^a * G(a, b-1).
    """
    if rows == 0 or cols == 0:
        return (1,)
    out = [0] * (rows * cols + 1)
    for m, cnt in enumerate(box_size_counts(rows - 1, cols)):
        out[m] += cnt
    for m, cnt in enumerate(box_size_counts(rows, cols - 1)):
        out[m + rows] += cnt
    return tuple(out)


def _partition_tuples(d: int, cap: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    for first in range(min(cap, d), 0, -1):
        for rest in _partition_tuples(d - first, first):
            yield (first,) + rest


def enumerate_partitions_of(d: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``d`` (parts capped at ``max_part`` if given),
    in descending lexicographic order: (d), (d-1, 1), ..., (1, ..., 1)."""
    if d < 0:
        raise ContractViolation("partition", f"cannot partition a negative total {d}")
    cap = d if max_part is None else max_part
    for t in _partition_tuples(d, cap):
        yield Partition(t)


def enumerate_colored(r: int, d: int) -> Iterator[ColoredPartition]:
    """All r-tuples of partitions with total size ``d``, each exactly once.

    Order: color-1 size descending from d to 0; within a size split,
    partitions per color in the order of :func:`enumerate_partitions_of`,
    color 1 varying slowest.
    """
    if r < 1:
        raise ContractViolation("colored", f"need at least one color, got {r}")
    if d < 0:
        raise ContractViolation("colored", f"total size must be non-negative, got {d}")

    def rec(colors: int, remaining: int):
        if colors == 1:
            for p in enumerate_partitions_of(remaining):
                yield (p,)
            return
        for d1 in range(remaining, -1, -1):
            for p in enumerate_partitions_of(d1):
                for rest in rec(colors - 1, remaining - d1):
                    yield (p,) + rest

    for comps in rec(r, d):
        yield ColoredPartition(comps)
