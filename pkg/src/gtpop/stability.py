"""Near patterns, approximate overlays, and the colored-partition bijection.

Interlacing is relaxed at the outer edges: a lower sequence of length s
nearly interlaces an upper one of length s+1 when the first entries and
last entries satisfy the one-sided bounds and the inner entries genuinely
interlace.  Iterating the single-pair map downward from a bounding row
turns r integers and r partitions into an approximately overlaid near
pattern (AONP); shifting by a large enough k lands in honest POP
territory, giving the bijection between r-colored partitions and POPs
with a fixed bounding row, weight, and combined proper-trapezoidal-area /
box count.  Complementation of the overlay exchanges box count d with
depth d, and conjugating a shift by complementation embeds one POP index
set into the next.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import ContractViolation
from .partition import ColoredPartition, Partition, break_multi
from .pattern import GTPattern
from .pop import POP, rectangle_at
from .seqcore import is_non_increasing, majorizes


def near_interlace_diagnostic(eta: Sequence[int], eta2: Sequence[int]) -> str | None:
    """None when ``eta2`` (length s) nearly interlaces ``eta`` (length s+1).

    Requires the middle entries eta_2 >= ... >= eta_s; for s >= 2 also
    eta_1 >= eta2_1, eta2_s >= eta_{s+1}, and eta_i >= eta2_i >= eta_{i+1}
    for 2 <= i <= s-1.  s = 1 imposes nothing.
    """
    s = len(eta) - 1
    if len(eta2) != s:
        return f"expected lengths s+1 and s, got {len(eta)} and {len(eta2)}"
    if s < 1:
        return "the upper sequence needs at least two entries"
    if not is_non_increasing(eta[1:s]):
        return "upper-sequence middle entries are not non-increasing"
    if s == 1:
        return None
    if eta2[0] > eta[0]:
        return "lower entry 1 exceeds upper entry 1"
    if eta[s] > eta2[s - 1]:
        return f"upper entry {s + 1} exceeds lower entry {s}"
    for i in range(2, s):
        if eta2[i - 1] > eta[i - 1]:
            return f"lower entry {i} exceeds upper entry {i}"
        if eta[i] > eta2[i - 1]:
            return f"upper entry {i + 1} exceeds lower entry {i}"
    return None


def nearly_interlaces(eta: Sequence[int], eta2: Sequence[int]) -> bool:
    return near_interlace_diagnostic(eta, eta2) is None


def approx_overlay_diagnostic(
    eta: Sequence[int], eta2: Sequence[int], pieces: Sequence[Partition]
) -> str | None:
    """None when ``pieces`` approximately overlays the nearly interlacing
    pair: the first piece is bounded only in part count, the last only in
    part size, the middle ones fit their full rectangles.  s = 1 imposes
    nothing."""
    s = len(eta) - 1
    if len(pieces) != s:
        return f"expected {s} overlay pieces, got {len(pieces)}"
    if s == 1:
        return None
    if pieces[0].num_parts > eta[0] - eta2[0]:
        return (
            f"piece 1 has too many parts: {pieces[0].num_parts} > {eta[0] - eta2[0]}"
        )
    if pieces[s - 1].largest > eta2[s - 1] - eta[s]:
        return (
            f"piece {s} has a part too large: "
            f"{pieces[s - 1].largest} > {eta2[s - 1] - eta[s]}"
        )
    for j in range(2, s):
        height = eta[j - 1] - eta2[j - 1]
        width = eta2[j - 1] - eta[j]
        p = pieces[j - 1]
        if p.num_parts > height:
            return f"piece {j} has too many parts: {p.num_parts} > {height}"
        if p.largest > width:
            return f"piece {j} has a part too large: {p.largest} > {width}"
    return None


def _require_near_pair(eta, eta2) -> None:
    problem = near_interlace_diagnostic(eta, eta2)
    if problem is not None:
        raise ContractViolation("near_interlacing", problem)


def proptrap_pair(eta: Sequence[int], eta2: Sequence[int]) -> int:
    """Proper trapezoidal area sum_{i<j} (eta_i - eta2_i)(eta2_j - eta_{j+1});
    zero when s = 1."""
    _require_near_pair(eta, eta2)
    return _proptrap_raw(eta, eta2)


def _proptrap_raw(eta, eta2) -> int:
    s = len(eta2)
    return sum(
        (eta[i - 1] - eta2[i - 1]) * (eta2[j - 1] - eta[j])
        for i in range(1, s + 1)
        for j in range(i + 1, s + 1)
    )


def proptrap_np(near: "NearPattern") -> int:
    """Proper trapezoidal area of a near pattern: the pair values summed
    over consecutive rows."""
    return near.proptrap


def diagnose_near_pattern(rows: Sequence[Sequence[int]]) -> str | None:
    if len(rows) == 0:
        return "a near pattern needs at least one row"
    for j, row in enumerate(rows, start=1):
        if len(row) != j:
            return f"row {j} has length {len(row)}; expected {j}"
    for j in range(1, len(rows)):
        problem = near_interlace_diagnostic(rows[j], rows[j - 1])
        if problem is not None:
            return f"rows {j}/{j + 1}: {problem}"
    return None


class NearPattern:
    """Triangular array whose consecutive rows nearly interlace."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(operator.index(v) for v in row) for row in rows)
        problem = diagnose_near_pattern(rows)
        if problem is not None:
            raise ContractViolation("near_pattern", problem)
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def bounding(self) -> tuple[int, ...]:
        return self.rows[-1]

    @cached_property
    def weight(self) -> tuple[int, ...]:
        out = []
        prev = 0
        for row in self.rows:
            s = sum(row)
            out.append(s - prev)
            prev = s
        return tuple(out)

    @cached_property
    def proptrap(self) -> int:
        return sum(
            _proptrap_raw(self.rows[j], self.rows[j - 1]) for j in range(1, self.n)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, NearPattern) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"NearPattern{self.rows}"


def diagnose_aonp_overlay(rows, overlay) -> str | None:
    r = len(rows) - 1
    if len(overlay) != r:
        return f"overlay has {len(overlay)} rows; expected {r}"
    for j in range(1, r + 1):
        if len(overlay[j - 1]) != j:
            return f"overlay row {j} has {len(overlay[j - 1])} slots; expected {j}"
        problem = approx_overlay_diagnostic(rows[j], rows[j - 1], overlay[j - 1])
        if problem is not None:
            return f"rows {j}/{j + 1}: {problem}"
    return None


class AONP:
    """Approximately overlaid near pattern."""

    def __init__(self, near: NearPattern, overlay):
        overlay = tuple(
            tuple(p if isinstance(p, Partition) else Partition(p) for p in row)
            for row in overlay
        )
        problem = diagnose_aonp_overlay(near.rows, overlay)
        if problem is not None:
            raise ContractViolation("approx_overlay", problem)
        self.near = near
        self.overlay = overlay

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.near.rows

    @property
    def r(self) -> int:
        return self.near.n - 1

    @property
    def weight(self) -> tuple[int, ...]:
        return self.near.weight

    @property
    def proptrap(self) -> int:
        return self.near.proptrap

    @cached_property
    def boxes(self) -> int:
        return sum(p.size for row in self.overlay for p in row)

    def to_pop(self) -> POP:
        """Checked refinement: valid only when the rows genuinely interlace
        and every overlay partition fits its full rectangle."""
        return POP(GTPattern(self.rows), self.overlay)

    @classmethod
    def from_pop(cls, pop: POP) -> "AONP":
        return cls(NearPattern(pop.pattern.rows), pop.overlay)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AONP)
            and self.rows == other.rows
            and self.overlay == other.overlay
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.overlay))

    def __repr__(self) -> str:
        return f"AONP({self.rows}, {self.overlay})"


def xi(eta: Sequence[int], mu: int, p: Partition) -> tuple[tuple[int, ...], tuple[Partition, ...]]:
    """Split (mu, p) against the context row ``eta`` of length s+1.

    Offsets c_j = mu - eta_{j+1} feed the multi-cut breakup of ``p``; the
    lower sequence drops the cut heights from the first s-1 entries and
    lifts the last entry by the final cut width.  The output nearly
    interlaces ``eta``, the pieces approximately overlay the pair,
    sum(eta) - sum(result) = mu, and proper trapezoidal area plus piece
    sizes recover |p|.  For s = 1 the lower entry is eta_1 + eta_2 - mu
    and the single piece is ``p`` itself.
    """
    eta = tuple(int(v) for v in eta)
    s = len(eta) - 1
    if s < 1:
        raise ContractViolation("length", "context sequence needs at least two entries")
    if not is_non_increasing(eta[1:s]):
        raise ContractViolation(
            "near_interlacing", f"middle entries of {eta} are not non-increasing"
        )
    if s == 1:
        return (eta[0] + eta[1] - mu,), (p,)
    c = tuple(mu - eta[j] for j in range(1, s))
    res = break_multi(c, p)
    a, b = res.a_seq, res.b_seq
    eta2 = [0] * s
    prev = 0
    for j in range(s - 1):
        eta2[j] = eta[j] - (a[j] - prev)
        prev = a[j]
    eta2[s - 1] = eta[s] + b[s - 2]
    return tuple(eta2), res.pieces


def xi_inv(
    eta: Sequence[int], eta2: Sequence[int], pieces: Sequence[Partition]
) -> tuple[int, Partition]:
    """Exact two-sided inverse of :func:`xi` for the fixed context ``eta``."""
    eta = tuple(int(v) for v in eta)
    eta2 = tuple(int(v) for v in eta2)
    pieces = tuple(pieces)
    _require_near_pair(eta, eta2)
    problem = approx_overlay_diagnostic(eta, eta2, pieces)
    if problem is not None:
        raise ContractViolation("approx_overlay", problem)
    s = len(eta2)
    mu = sum(eta) - sum(eta2)
    bstar = [0] * (s + 1)
    for j in range(s - 1, 0, -1):
        bstar[j] = bstar[j + 1] + (eta2[j] - eta[j + 1])
    parts = []
    prev_a = 0
    for j in range(1, s):
        a_j = prev_a + (eta[j - 1] - eta2[j - 1])
        for k in range(1, a_j - prev_a + 1):
            parts.append(pieces[j - 1].part(k) + bstar[j])
        prev_a = a_j
    parts.extend(pieces[s - 1].parts)
    return mu, Partition(parts)


def xi_np(
    bounding: Sequence[int], mus: Sequence[int], ps: Sequence[Partition]
) -> AONP:
    """Iterate :func:`xi` downward from the bounding row.

    Stage j (from r down to 1) consumes mus[j-1] and ps[j-1] against the
    row of length j+1 and produces the row of length j together with the
    overlay pieces of that pair.  The resulting AONP has weight
    (mu_1, mus...) with mu_1 the complementary sum, and its proper
    trapezoidal area plus boxes equals the total size of ``ps``.
    """
    bounding = tuple(int(v) for v in bounding)
    r = len(bounding) - 1
    if r < 1:
        raise ContractViolation("length", "bounding row needs at least two entries")
    if len(mus) != r or len(ps) != r:
        raise ContractViolation(
            "length", f"need {r} integers and {r} partitions, got {len(mus)} and {len(ps)}"
        )
    rows: list[tuple[int, ...]] = [()] * (r + 1)
    rows[r] = bounding
    overlay: list[tuple[Partition, ...]] = [()] * r
    for j in range(r, 0, -1):
        eta2, pieces = xi(rows[j], int(mus[j - 1]), ps[j - 1])
        rows[j - 1] = eta2
        overlay[j - 1] = pieces
    return AONP(NearPattern(tuple(rows)), tuple(overlay))


def xi_np_inv(aonp: AONP) -> tuple[tuple[int, ...], tuple[Partition, ...]]:
    """Exact two-sided inverse of :func:`xi_np` for the fixed bounding row."""
    if aonp.r < 1:
        raise ContractViolation("length", "need at least two rows")
    mus = []
    ps = []
    for j in range(1, aonp.r + 1):
        mu, p = xi_inv(aonp.rows[j], aonp.rows[j - 1], aonp.overlay[j - 1])
        mus.append(mu)
        ps.append(p)
    return tuple(mus), tuple(ps)


def shift_seq(k: int, seq: Sequence[int]) -> tuple[int, ...]:
    """Shift by k: first entry +2k, middle entries +k, last entry +0; a
    length-1 sequence gets +k."""
    seq = tuple(int(v) for v in seq)
    if len(seq) == 0:
        raise ContractViolation("length", "cannot shift an empty sequence")
    if len(seq) == 1:
        return (seq[0] + k,)
    return (seq[0] + 2 * k,) + tuple(v + k for v in seq[1:-1]) + (seq[-1],)


def shift(k: int, x):
    """Shift a sequence, pattern, near pattern, AONP, or POP by k.

    Pattern kinds are shifted rowwise; overlays stay as they are.  Proper
    trapezoidal area is preserved and the weight moves by k in every
    coordinate.
    """
    if isinstance(x, POP):
        return POP(
            GTPattern(tuple(shift_seq(k, row) for row in x.pattern.rows)), x.overlay
        )
    if isinstance(x, AONP):
        return AONP(
            NearPattern(tuple(shift_seq(k, row) for row in x.rows)), x.overlay
        )
    if isinstance(x, NearPattern):
        return NearPattern(tuple(shift_seq(k, row) for row in x.rows))
    if isinstance(x, GTPattern):
        return GTPattern(tuple(shift_seq(k, row) for row in x.rows))
    return shift_seq(k, x)


def phi(bounding: Sequence[int], mus: Sequence[int], cp: ColoredPartition) -> AONP:
    """The colored-partition side of the bijection.

    ``bounding`` must be non-increasing and majorize the full weight
    (mu_1, mus...) with mu_1 the complementary sum.  The image is the AONP
    built by :func:`xi_np` from the color components; its proper
    trapezoidal area plus boxes equals the colored partition's size.
    """
    bounding = tuple(int(v) for v in bounding)
    if not is_non_increasing(bounding):
        raise ContractViolation(
            "non_increasing", f"bounding row must be non-increasing, got {bounding}"
        )
    r = len(bounding) - 1
    if cp.r != r:
        raise ContractViolation(
            "colored", f"colored partition has {cp.r} colors; bounding needs {r}"
        )
    mus = tuple(int(v) for v in mus)
    if len(mus) != r:
        raise ContractViolation("length", f"need {r} weight entries, got {len(mus)}")
    full_weight = (sum(bounding) - sum(mus),) + mus
    if not majorizes(bounding, full_weight):
        raise ContractViolation(
            "majorization", f"{bounding} does not majorize {full_weight}"
        )
    return xi_np(bounding, mus, cp.components)


def cp_to_pop(
    bounding: Sequence[int], mus: Sequence[int], k: int, cp: ColoredPartition
) -> POP:
    """Shift the image of :func:`phi` by k; valid for k at least the
    colored partition's size, below which the image may leave POP
    territory."""
    d = cp.size
    if k < d:
        raise ContractViolation(
            "stable_shift", f"shift {k} is outside the stable shift range (needs k >= {d})"
        )
    return shift(k, phi(bounding, mus, cp)).to_pop()


def complement_pop(pop: POP) -> POP:
    """Replace every overlay partition by its complement in its rectangle;
    an involution exchanging b boxes with area - b boxes."""
    rows = pop.pattern.rows
    overlay = tuple(
        tuple(
            pop.overlay[j - 1][i - 1].complement(rectangle_at(rows, j, i))
            for i in range(1, j + 1)
        )
        for j in range(1, pop.r + 1)
    )
    return POP(pop.pattern, overlay)


def embed(pop: POP, j: int) -> POP:
    """Inclusion of POP index sets: complement, shift by j, complement.

    Preserves depth, moves the weight up by j in every coordinate, and
    composes additively in j.
    """
    if j < 0:
        raise ContractViolation("shift", f"embedding level must be non-negative, got {j}")
    return complement_pop(shift(j, complement_pop(pop)))


def theta_tuple(n: int) -> tuple[int, ...]:
    """The tuple (2, 1, ..., 1, 0) of length n >= 2."""
    if n < 2:
        raise ContractViolation("length", f"need length at least 2, got {n}")
    return (2,) + (1,) * (n - 2) + (0,)


@dataclass(frozen=True)
class StableRangeReport:
    ell: int
    depth: int
    stable: bool


def stable_range_report(
    lam: Sequence[int], k: int, weight: Sequence[int], depth: int
) -> StableRangeReport:
    """Least ell in [0, k] with weight - (k - ell)*1 majorized by
    lam + ell*theta, scanned upward, and the predicate k >= ell + depth."""
    lam = tuple(int(v) for v in lam)
    if not is_non_increasing(lam):
        raise ContractViolation("non_increasing", f"{lam} is not non-increasing")
    if k < 0:
        raise ContractViolation("shift", f"shift level must be non-negative, got {k}")
    th = theta_tuple(len(lam))
    weight = tuple(int(v) for v in weight)
    if len(weight) != len(lam):
        raise ContractViolation(
            "length", f"weight must have length {len(lam)}, got {len(weight)}"
        )
    for ell in range(k + 1):
        target = tuple(l + ell * t for l, t in zip(lam, th))
        candidate = tuple(w - (k - ell) for w in weight)
        if majorizes(target, candidate):
            return StableRangeReport(ell, depth, k >= ell + depth)
    raise ContractViolation(
        "majorization", f"{weight} is not majorized by {lam} + {k}*theta"
    )


def stable_range(lam: Sequence[int], k: int, pop: POP) -> StableRangeReport:
    """Stable-range report for a POP whose bounding row is lam + k*theta."""
    lam = tuple(int(v) for v in lam)
    if not is_non_increasing(lam):
        raise ContractViolation("non_increasing", f"{lam} is not non-increasing")
    if k < 0:
        raise ContractViolation("shift", f"shift level must be non-negative, got {k}")
    expected = tuple(l + k * t for l, t in zip(lam, theta_tuple(len(lam))))
    if pop.pattern.bounding != expected:
        raise ContractViolation(
            "bounding",
            f"bounding {pop.pattern.bounding} differs from lam + k*theta = {expected}",
        )
    return stable_range_report(lam, k, pop.pattern.weight, pop.depth)
