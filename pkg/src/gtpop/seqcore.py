"""Predicates and functionals on finite integer sequences.

Sequences are plain tuples (or any indexable sequence) of ints.  A
"non-increasing sequence" has weakly decreasing entries; an "integer tuple"
is unconstrained.  Everything here is a pure function on exact integers;
empty sequences are legal and handled as the vacuous case.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ContractViolation


def is_non_increasing(seq: Sequence[int]) -> bool:
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def _require_non_increasing(seq: Sequence[int], name: str) -> None:
    if not is_non_increasing(seq):
        raise ContractViolation(
            "non_increasing", f"{name} must be non-increasing, got {tuple(seq)}"
        )


def interlaces(lo: Sequence[int], hi: Sequence[int]) -> bool:
    """True iff hi_1 >= lo_1 >= hi_2 >= lo_2 >= ... >= hi_n.

    ``hi`` has length n >= 1 and ``lo`` length n-1, both non-increasing.
    For n = 1 (``lo`` empty) the condition is vacuously true.
    """
    if len(hi) != len(lo) + 1:
        raise ContractViolation(
            "length",
            f"interlacing needs lengths n and n-1, got {len(lo)} and {len(hi)}",
        )
    _require_non_increasing(hi, "hi")
    _require_non_increasing(lo, "lo")
    return all(hi[i] >= lo[i] >= hi[i + 1] for i in range(len(lo)))


def weakly_interlaces(hi: Sequence[int], lo: Sequence[int]) -> bool:
    """True iff every j-subset sum of ``lo`` sits between the top-j and
    bottom-j sums of ``hi``.

    ``hi`` is non-increasing of length n, ``lo`` an arbitrary integer tuple
    of length n-1.  The subset-quantified condition reduces to comparing
    prefix sums of ``hi`` against the j largest entries of ``lo`` and suffix
    sums of ``hi`` against the j smallest; that reduction is what is
    computed here.
    """
    if len(hi) != len(lo) + 1:
        raise ContractViolation(
            "length",
            f"weak interlacing needs lengths n and n-1, got {len(hi)} and {len(lo)}",
        )
    _require_non_increasing(hi, "hi")
    n = len(hi)
    dec = sorted(lo, reverse=True)
    prefix = largest = 0
    for j in range(1, n):
        prefix += hi[j - 1]
        largest += dec[j - 1]
        if prefix < largest:
            return False
    suffix = smallest = 0
    for j in range(1, n):
        suffix += hi[n - j]
        smallest += dec[n - 1 - j]
        if smallest < suffix:
            return False
    return True


def weakly_majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """Sorted-descending prefix sums of ``x`` dominate those of ``y``."""
    if len(x) != len(y):
        raise ContractViolation(
            "length", f"majorization needs equal lengths, got {len(x)} and {len(y)}"
        )
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    px = py = 0
    for k in range(len(xs)):
        px += xs[k]
        py += ys[k]
        if px < py:
            return False
    return True


def majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """Weak majorization plus equal total sums."""
    return weakly_majorizes(x, y) and sum(x) == sum(y)


def norm_sq(x: Sequence[int]) -> int:
    """Sum of squares of the entries, exact."""
    return sum(v * v for v in x)
