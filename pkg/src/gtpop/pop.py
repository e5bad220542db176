"""Partition-overlaid patterns (POPs) and their graded bookkeeping.

A POP is an integral pattern of n rows together with, for every slot
(j, i) with 1 <= i <= j <= n-1, a partition fitting the rectangle

    (row_{j+1}[i] - row_j[i],  row_j[i] - row_{j+1}[i+1])

cut out by the local interlacing gaps.  The number of boxes of a POP is
the total size of its overlay; its depth is the pattern's trapezoidal
area minus the boxes.  POPs with a fixed bounding row index a graded
monomial basis: weight = pattern weight, grade = boxes; the graded
character below is the corresponding generating function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from .errors import ContractViolation
from .partition import Partition, Rectangle, box_size_counts, enumerate_in_box
from .pattern import GTPattern, enumerate_patterns
from .seqcore import norm_sq


def rectangle_at(rows: Sequence[Sequence[int]], j: int, i: int) -> Rectangle:
    """Overlay box at slot (j, i), 1 <= i <= j <= len(rows)-1."""
    return Rectangle(
        rows[j][i - 1] - rows[j - 1][i - 1], rows[j - 1][i - 1] - rows[j][i]
    )


def _normalize_overlay(overlay) -> tuple[tuple[Partition, ...], ...]:
    return tuple(
        tuple(p if isinstance(p, Partition) else Partition(p) for p in row)
        for row in overlay
    )


def diagnose_overlay(rows, overlay) -> str | None:
    """None if ``overlay`` fits the rectangles of ``rows``, else the first
    violated constraint."""
    r = len(rows) - 1
    if len(overlay) != r:
        return f"overlay has {len(overlay)} rows; expected {r}"
    for j in range(1, r + 1):
        if len(overlay[j - 1]) != j:
            return f"overlay row {j} has {len(overlay[j - 1])} slots; expected {j}"
        for i in range(1, j + 1):
            rect = rectangle_at(rows, j, i)
            p = overlay[j - 1][i - 1]
            if p.num_parts > rect.rows:
                return (
                    f"overlay partition at (j={j}, i={i}) has too many parts: "
                    f"{p.num_parts} > {rect.rows}"
                )
            if p.largest > rect.cols:
                return (
                    f"overlay partition at (j={j}, i={i}) has a part too large: "
                    f"{p.largest} > {rect.cols}"
                )
    return None


class POP:
    """Immutable validated partition-overlaid pattern."""

    def __init__(self, pattern: GTPattern, overlay):
        overlay = _normalize_overlay(overlay)
        problem = diagnose_overlay(pattern.rows, overlay)
        if problem is not None:
            raise ContractViolation("overlay", problem)
        self.pattern = pattern
        self.overlay = overlay

    @property
    def r(self) -> int:
        return self.pattern.n - 1

    def rectangle(self, j: int, i: int) -> Rectangle:
        return rectangle_at(self.pattern.rows, j, i)

    @cached_property
    def boxes(self) -> int:
        return sum(p.size for row in self.overlay for p in row)

    @property
    def depth(self) -> int:
        return self.pattern.traparea - self.boxes

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, POP)
            and self.pattern.rows == other.pattern.rows
            and self.overlay == other.overlay
        )

    def __hash__(self) -> int:
        return hash((self.pattern.rows, self.overlay))

    def __repr__(self) -> str:
        return f"POP({self.pattern.rows}, {self.overlay})"


def empty_overlay(pattern: GTPattern) -> tuple[tuple[Partition, ...], ...]:
    return tuple(tuple(Partition() for _ in range(j)) for j in range(1, pattern.n))


def full_overlay(pattern: GTPattern) -> tuple[tuple[Partition, ...], ...]:
    """Every rectangle completely filled; realizes the maximal box count,
    which equals the pattern's area."""
    out = []
    for j in range(1, pattern.n):
        row = []
        for i in range(1, j + 1):
            rect = rectangle_at(pattern.rows, j, i)
            row.append(Partition((rect.cols,) * rect.rows))
        out.append(tuple(row))
    return tuple(out)


def generator_pop(bounding: Sequence[int]) -> POP:
    """The unique POP of weight equal to its bounding row: prefix rows and
    an empty overlay."""
    bounding = tuple(int(v) for v in bounding)
    pattern = GTPattern(tuple(bounding[:j] for j in range(1, len(bounding) + 1)))
    return POP(pattern, empty_overlay(pattern))


def enumerate_pops(
    bounding: Sequence[int],
    weight: Sequence[int] | None = None,
    boxes: int | None = None,
    depth: int | None = None,
) -> Iterator[POP]:
    """All POPs with the given bounding row matching the filters, once each.

    Order: patterns in :func:`enumerate_patterns` order; for each pattern,
    overlay slots flattened as (j=1..r, i=1..j) with the partition in each
    slot running through :func:`enumerate_in_box` order, earlier slots
    varying slowest.
    """
    for pat in enumerate_patterns(bounding, weight):
        target: int | None = None
        if depth is not None:
            t = pat.traparea - depth
            if t < 0:
                continue
            target = t
        if boxes is not None:
            if target is not None and target != boxes:
                continue
            target = boxes
        rects = [
            rectangle_at(pat.rows, j, i)
            for j in range(1, pat.n)
            for i in range(1, j + 1)
        ]
        if target is not None and target > sum(rc.area for rc in rects):
            continue
        suffix_cap = [0] * (len(rects) + 1)
        for idx in range(len(rects) - 1, -1, -1):
            suffix_cap[idx] = suffix_cap[idx + 1] + rects[idx].area

        chosen: list[Partition] = []

        def rec(idx: int, remaining: int | None) -> Iterator[tuple[Partition, ...]]:
            if idx == len(rects):
                if remaining is None or remaining == 0:
                    yield tuple(chosen)
                return
            for p in enumerate_in_box(rects[idx]):
                rest = None
                if remaining is not None:
                    rest = remaining - p.size
                    if rest < 0 or rest > suffix_cap[idx + 1]:
                        continue
                chosen.append(p)
                yield from rec(idx + 1, rest)
                chosen.pop()

        for flat in rec(0, target):
            overlay = []
            pos = 0
            for j in range(1, pat.n):
                overlay.append(flat[pos : pos + j])
                pos += j
            yield POP(pat, tuple(overlay))


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


class GradedCharacter:
    """Finite map from weight tuples to coefficient tuples; the coefficient
    at index g counts POPs of that weight with g boxes."""

    def __init__(self, terms):
        cleaned = {}
        for w, coeffs in terms.items():
            cs = list(coeffs)
            while cs and cs[-1] == 0:
                cs.pop()
            if cs:
                cleaned[tuple(w)] = tuple(cs)
        self.terms = cleaned

    def coeffs(self, weight: Sequence[int]) -> tuple[int, ...]:
        return self.terms.get(tuple(weight), ())

    def total(self) -> int:
        return sum(sum(cs) for cs in self.terms.values())

    def items(self):
        """Terms sorted by weight tuple, descending (deterministic)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedCharacter) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"GradedCharacter({self.terms})"


def graded_character(bounding: Sequence[int]) -> GradedCharacter:
    """Generating function of POPs with the given bounding row.

    Each pattern contributes the product over its rectangles of the
    box-partition size polynomials; summing over patterns of a weight
    gives that weight's coefficient list.
    """
    terms: dict[tuple[int, ...], list[int]] = {}
    for pat in enumerate_patterns(bounding):
        poly: tuple[int, ...] = (1,)
        for j in range(1, pat.n):
            for i in range(1, j + 1):
                rect = rectangle_at(pat.rows, j, i)
                poly = _poly_mul(poly, box_size_counts(rect.rows, rect.cols))
        acc = terms.setdefault(pat.weight, [])
        if len(acc) < len(poly):
            acc.extend([0] * (len(poly) - len(acc)))
        for g, c in enumerate(poly):
            acc[g] += c
    return GradedCharacter(terms)


@dataclass(frozen=True)
class TopGradeProfile:
    """Maximal box count among POPs of one weight, how many attain it, and
    the squared-norm gap prediction.  ``max_boxes`` is None when the weight
    is not realized."""

    max_boxes: int | None
    count: int | None
    norm_gap_half: int | None

    @property
    def present(self) -> bool:
        return self.max_boxes is not None

    @property
    def consistent(self) -> bool:
        return (
            self.present
            and self.max_boxes == self.norm_gap_half
            and self.count == 1
        )


def top_grade_profile(bounding: Sequence[int], w: Sequence[int]) -> TopGradeProfile:
    """Enumerated top grade and multiplicity for weight ``w``.

    A pattern admits exactly one overlay of maximal size (every rectangle
    filled), so the top grade is the maximal pattern area for the weight
    and the multiplicity is the number of patterns attaining it.
    """
    bounding = tuple(int(v) for v in bounding)
    w = tuple(int(v) for v in w)
    gap_half: int | None = None
    if sum(w) == sum(bounding):
        gap2 = norm_sq(bounding) - norm_sq(w)
        if gap2 % 2 == 0:
            gap_half = gap2 // 2
    best: int | None = None
    count = 0
    for pat in enumerate_patterns(bounding, weight=w):
        if best is None or pat.area > best:
            best, count = pat.area, 1
        elif pat.area == best:
            count += 1
    if best is None:
        return TopGradeProfile(None, None, gap_half)
    return TopGradeProfile(best, count, gap_half)


class CLEntry(NamedTuple):
    ell: int
    s: tuple[int, ...]


@dataclass(frozen=True)
class CLIndex:
    """Basis-index tuple: for each slot (j, i) a count ``ell`` and a weakly
    increasing list ``s`` of that length, stored as entries[j-1][i-1]."""

    entries: tuple[tuple[CLEntry, ...], ...]

    @property
    def r(self) -> int:
        return len(self.entries)


def to_cl_index(pop: POP) -> CLIndex:
    """Read off the index of a POP: ell is the rectangle height at (j, i)
    and s lists the overlay parts increasingly, zero-padded at the front."""
    rows = pop.pattern.rows
    out = []
    for j in range(1, pop.r + 1):
        row = []
        for i in range(1, j + 1):
            ell = rows[j][i - 1] - rows[j - 1][i - 1]
            parts = pop.overlay[j - 1][i - 1].parts
            s = (0,) * (ell - len(parts)) + tuple(reversed(parts))
            row.append(CLEntry(ell, s))
        out.append(tuple(row))
    return CLIndex(tuple(out))


def _cl_bound(bounding, entries, i: int, j: int) -> int:
    """Largest-part bound at (i, j): m_i plus the ell-count difference of
    the two staircases below the slot."""
    r = len(bounding) - 1
    m_i = bounding[i - 1] - bounding[i]
    gain = sum(entries[h - 1][i].ell for h in range(j + 1, r + 1))
    loss = sum(entries[h - 1][i - 1].ell for h in range(j, r + 1))
    return m_i + gain - loss


def from_cl_index(bounding: Sequence[int], index: CLIndex) -> POP:
    """Rebuild the POP of an index: row j entry i is row j+1 entry i minus
    ell, top-down; the overlay partition is s sorted decreasingly."""
    bounding = tuple(int(v) for v in bounding)
    r = len(bounding) - 1
    if index.r != r:
        raise ContractViolation(
            "cl_shape", f"index has {index.r} rows; bounding of length {r + 1} needs {r}"
        )
    for j in range(1, r + 1):
        if len(index.entries[j - 1]) != j:
            raise ContractViolation(
                "cl_shape", f"index row {j} has {len(index.entries[j - 1])} slots; expected {j}"
            )
        for i in range(1, j + 1):
            ell, s = index.entries[j - 1][i - 1]
            if ell < 0:
                raise ContractViolation("cl_shape", f"ell at (i={i}, j={j}) is negative")
            if len(s) != ell:
                raise ContractViolation(
                    "cl_shape", f"s at (i={i}, j={j}) has length {len(s)}; expected {ell}"
                )
            if any(s[k] > s[k + 1] for k in range(len(s) - 1)) or (s and s[0] < 0):
                raise ContractViolation(
                    "cl_shape",
                    f"s at (i={i}, j={j}) must be weakly increasing and non-negative",
                )
            if ell > 0:
                bound = _cl_bound(bounding, index.entries, i, j)
                if s[-1] > bound:
                    raise ContractViolation(
                        "clineq",
                        f"index entry at (i={i}, j={j}) violates the largest-part "
                        f"bound: {s[-1]} > {bound}",
                    )
    rows: list[tuple[int, ...]] = [()] * (r + 1)
    rows[r] = bounding
    for j in range(r, 0, -1):
        rows[j - 1] = tuple(
            rows[j][i - 1] - index.entries[j - 1][i - 1].ell for i in range(1, j + 1)
        )
    overlay = tuple(
        tuple(
            Partition(sorted(index.entries[j - 1][i - 1].s, reverse=True))
            for i in range(1, j + 1)
        )
        for j in range(1, r + 1)
    )
    return POP(GTPattern(tuple(rows)), overlay)


def render_cl_monomial(pop: POP) -> str:
    """Deterministic text form of the basis monomial of a POP.

    One factor per slot (j, i) and per t-degree k with a positive
    multiplicity: "(x-[i,j]⊗t^k)^(n)", where n counts the overlay parts
    equal to k, the k = 0 multiplicity covering the unused rectangle rows.
    Factors are ordered by j, then i, then k; the empty product is "1".
    """
    factors = []
    for j in range(1, pop.r + 1):
        for i in range(1, j + 1):
            rect = pop.rectangle(j, i)
            parts = pop.overlay[j - 1][i - 1].parts
            mult = [0] * (rect.cols + 1)
            for v in parts:
                mult[v] += 1
            mult[0] = rect.rows - len(parts)
            for k in range(rect.cols + 1):
                if mult[k] == 0:
                    continue
                t_part = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
                factors.append(f"(x-[{i},{j}]⊗{t_part})^({mult[k]})")
    return "·".join(factors) if factors else "1"
