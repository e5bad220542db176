"""Construction of the canonical area-maximizing pattern.

Given a non-increasing integer sequence and a majorized integer weight,
one row at a time is produced under the row above it; the resulting
pattern is the unique one whose area equals half the squared-norm gap
between its bounding sequence and its weight, and each of its rows
majorizes the corresponding row of every other pattern with the same
bounding sequence and weight.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ContractViolation
from .pattern import GTPattern
from .seqcore import is_non_increasing, majorizes


def _check_step_inputs(lam: tuple[int, ...], mu: tuple[int, ...]) -> None:
    if len(lam) != len(mu):
        raise ContractViolation(
            "length", f"sequence and weight lengths differ: {len(lam)} vs {len(mu)}"
        )
    if not is_non_increasing(lam):
        raise ContractViolation("non_increasing", f"{lam} is not non-increasing")
    if not majorizes(lam, mu):
        raise ContractViolation("majorization", f"{lam} does not majorize {mu}")


def _pivot_candidates(lam: tuple[int, ...], head_sum: int) -> list[int]:
    """All 1-based pivots k with aux_k <= head_sum <= aux_{k+1}, where
    aux_k = sum(lam) - lam_k is non-decreasing in k."""
    total = sum(lam)
    aux = [total - v for v in lam]
    return [k for k in range(1, len(lam)) if aux[k - 1] <= head_sum <= aux[k]]


def _step_at(lam: tuple[int, ...], head_sum: int, k0: int) -> tuple[int, ...]:
    out = list(lam[: k0 - 1]) + [0] + list(lam[k0 + 1 :])
    out[k0 - 1] = head_sum - (sum(lam[: k0 - 1]) + sum(lam[k0 + 1 :]))
    return tuple(out)


def max_area_step(lam: Sequence[int], mu: Sequence[int]) -> tuple[int, ...]:
    """The unique row below ``lam`` that keeps the area maximal.

    The result interlaces ``lam``, sums to mu_1 + ... + mu_{n-1}, and its
    trapezoidal and triangular pair areas against ``lam`` agree.  The
    smallest admissible pivot is used; the construction is independent of
    that choice.
    """
    lam = tuple(int(v) for v in lam)
    mu = tuple(int(v) for v in mu)
    _check_step_inputs(lam, mu)
    n = len(lam)
    if n == 1:
        return ()
    head_sum = sum(mu[:-1])
    return _step_at(lam, head_sum, _pivot_candidates(lam, head_sum)[0])


def max_area_pattern(lam: Sequence[int], mu: Sequence[int]) -> GTPattern:
    """The unique pattern with bounding ``lam``, weight ``mu``, and area
    equal to (norm_sq(lam) - norm_sq(mu)) / 2."""
    lam = tuple(int(v) for v in lam)
    mu = tuple(int(v) for v in mu)
    _check_step_inputs(lam, mu)
    rows = [lam]
    cur = lam
    for j in range(len(lam), 1, -1):
        cur = max_area_step(cur, mu[:j])
        rows.append(cur)
    return GTPattern(tuple(reversed(rows)))
